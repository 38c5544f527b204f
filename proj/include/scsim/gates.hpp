#pragma once

#include "scsim/bitstream.hpp"

namespace scsim {

/// AND: p_x * p_y for uncorrelated inputs; min(p_x, p_y) at correlation +1;
/// max(0, p_x + p_y - 1) at correlation -1.
Bitstream mult(const Bitstream& x, const Bitstream& y);

/// Mux: bit = sel ? x : y. With an independent half-density select this is
/// the scaled sum 0.5*(p_x + p_y); output precision equals input precision,
/// so the true sum's least significant bit is dropped.
Bitstream scaled_add(const Bitstream& x, const Bitstream& y, const Bitstream& sel);

/// OR: min(1, p_x + p_y) for maximally negatively correlated inputs.
Bitstream sat_add(const Bitstream& x, const Bitstream& y);

/// XOR: |p_x - p_y| for maximally positively correlated inputs.
Bitstream sub_correlated(const Bitstream& x, const Bitstream& y);

/// One-cycle delay: out_0 = init, out_t = x_{t-1}. Length is preserved, the
/// last input bit is dropped, and bit order is otherwise untouched.
Bitstream isolator(const Bitstream& x, bool init = false);

}  // namespace scsim

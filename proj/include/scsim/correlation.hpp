#pragma once

#include <cstdint>

#include "scsim/bitstream.hpp"

namespace scsim {

/// Positionwise joint tallies of two equal-length streams:
/// a = #(1,1), b = #(1,0), c = #(0,1), d = #(0,0); a+b+c+d = N.
struct SccCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  std::int64_t n() const { return a + b + c + d; }
};

SccCounts scc_counts(const Bitstream& x, const Bitstream& y);

/// Stochastic-computing correlation in [-1,+1]:
///
///   scc = (ad - bc) / (N*min(a+b, a+c) - (a+b)(a+c))   if ad > bc
///       = (ad - bc) / ((a+b)(a+c) - N*max(a-d, 0))     otherwise
///
/// The selected denominator is zero exactly when one stream is constant;
/// that case returns 0 by convention. All arithmetic is done on exact
/// integer counts and converted to double only at the division.
double scc(const SccCounts& k);
double scc(const Bitstream& x, const Bitstream& y);

/// value(out) - value(inp): the value deviation a circuit introduces.
double bias(const Bitstream& out, const Bitstream& inp, Encoding enc);

double abs_error(double measured, double exact);

}  // namespace scsim

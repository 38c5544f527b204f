#pragma once

#include <cstdint>
#include <vector>

#include "scsim/bitstream.hpp"
#include "scsim/rng.hpp"

namespace scsim {

/// Comparator-based digital-to-stochastic conversion: bit_t = (r_t < x).
/// x must be in [0, n] and the generator range must equal n, so the encoded
/// value is x/n. The RngStream form keeps stepping the caller's generator;
/// the RngConfig form runs a fresh one from its initial state.
Bitstream d_to_s(std::uint32_t x, RngStream& rng, std::size_t n);
Bitstream d_to_s(std::uint32_t x, const RngConfig& rng, std::size_t n);

/// Counter-based stochastic-to-digital read-back.
std::size_t s_to_d(const Bitstream& x);

/// Select-signal generator: n bits of density 1/2, thresholding the
/// generator at half of its own natural range (2^width for Lfsr/Vdc, n for
/// Halton or when no width is set). Unlike d_to_s this does not couple the
/// generator range to the stream length, so one free-running select source
/// serves any n.
Bitstream half_density_select(const RngConfig& rng, std::size_t n);

/// Converts every stream to digital and back. With shared = true the same
/// generator sequence is replayed for every stream, which makes the output
/// supports nested and every pairwise correlation maximally positive. With
/// shared = false each stream gets its own generator: streams[0] uses `rng`
/// and stream i a Halton sequence on the i-th odd prime (skipping a base
/// equal to rng's), so outputs come out pairwise uncorrelated. Each stream's
/// ones count is preserved exactly whenever its generator emits every value
/// in [0, n) once per period.
std::vector<Bitstream> regenerate(const std::vector<Bitstream>& streams,
                                  const RngConfig& rng, bool shared);

}  // namespace scsim

#pragma once

#include <random>

#include "scsim/bitstream.hpp"
#include "scsim/convert.hpp"
#include "scsim/rng.hpp"

namespace scsim::test {

inline Bitstream random_stream(std::mt19937& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  Bitstream s(n);
  for (std::size_t t = 0; t < n; ++t) s.set_bit(t, bit(rng));
  return s;
}

/// Generates a stream whose support is the complement-side of the comparator
/// (bit = r >= n - x), giving maximal negative correlation against a stream
/// thresholded from the same generator sequence.
inline Bitstream d_to_s_anticorrelated(std::uint32_t x, const RngConfig& cfg, std::size_t n) {
  return d_to_s(static_cast<std::uint32_t>(n) - x, cfg, n).complement();
}

}  // namespace scsim::test

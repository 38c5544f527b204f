#include "scsim/convert.hpp"

#include <stdexcept>
#include <string>

namespace scsim {

Bitstream d_to_s(std::uint32_t x, RngStream& rng, std::size_t n) {
  if (x > n) {
    throw std::invalid_argument("d_to_s: value " + std::to_string(x) +
                                " out of range [0, " + std::to_string(n) + "]");
  }
  if (rng.range() != n) {
    throw std::invalid_argument("d_to_s: generator range " + std::to_string(rng.range()) +
                                " does not match stream length " + std::to_string(n));
  }
  Bitstream out(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (rng.next() < x) out.set_bit(t, true);
  }
  return out;
}

Bitstream d_to_s(std::uint32_t x, const RngConfig& rng, std::size_t n) {
  RngStream stream(rng, static_cast<std::uint32_t>(n));
  return d_to_s(x, stream, n);
}

std::size_t s_to_d(const Bitstream& x) { return x.ones(); }

Bitstream half_density_select(const RngConfig& rng, std::size_t n) {
  std::uint32_t range;
  if (rng.kind == RngKind::Halton || rng.width == 0) {
    range = static_cast<std::uint32_t>(n);
  } else {
    range = std::uint32_t{1} << rng.width;
  }
  RngStream stream(rng, range);
  Bitstream out(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (stream.next() < range / 2) out.set_bit(t, true);
  }
  return out;
}

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// 3, 5, 7, 11, ... skipping `avoid`.
int odd_prime(int index, int avoid) {
  int p = 3;
  for (;;) {
    if (is_prime(p) && p != avoid) {
      if (index == 0) return p;
      --index;
    }
    p += 2;
  }
}

}  // namespace

std::vector<Bitstream> regenerate(const std::vector<Bitstream>& streams,
                                  const RngConfig& rng, bool shared) {
  std::vector<Bitstream> out;
  out.reserve(streams.size());
  const std::size_t n = streams.empty() ? 0 : streams.front().size();
  const int avoid = rng.kind == RngKind::Halton ? rng.base : 0;
  for (std::size_t i = 0; i < streams.size(); ++i) {
    if (streams[i].size() != n) {
      throw std::invalid_argument("regenerate: streams must share one length");
    }
    const auto x = static_cast<std::uint32_t>(s_to_d(streams[i]));
    RngConfig cfg = rng;
    if (!shared && i > 0) cfg = RngConfig::halton(odd_prime(static_cast<int>(i) - 1, avoid));
    out.push_back(d_to_s(x, cfg, n));
  }
  return out;
}

}  // namespace scsim

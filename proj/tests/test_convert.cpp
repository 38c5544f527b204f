#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "helpers.hpp"
#include "scsim/convert.hpp"
#include "scsim/correlation.hpp"

using namespace scsim;

TEST_SUITE("convert") {

TEST_CASE("comparator encoding against the vdc sequence") {
  // r = 4,2,6,1,5,3,7,0 (bit reversal from index 1), thresholded at 3.
  const Bitstream s = d_to_s(3, RngConfig::vdc(3), 8);
  CHECK(s.to_string() == "01010001");
  CHECK(s.ones() == 3);
  CHECK(d_to_s(0, RngConfig::vdc(3), 8).ones() == 0);
  CHECK(d_to_s(8, RngConfig::vdc(3), 8).ones() == 8);
  CHECK_THROWS_AS(d_to_s(9, RngConfig::vdc(3), 8), std::invalid_argument);
}

TEST_CASE("generator range must match the stream length") {
  RngStream rng(RngConfig::vdc(4), 16);
  CHECK_THROWS_AS(d_to_s(3, rng, 8), std::invalid_argument);
}

TEST_CASE("read-back and round trip") {
  CHECK(s_to_d(Bitstream::from_string("01010001")) == 3);
  CHECK(s_to_d(Bitstream(12)) == 0);
  for (int w : {3, 4, 8}) {
    const std::size_t n = std::size_t{1} << w;
    for (std::uint32_t x = 0; x <= n; ++x) {
      CHECK(s_to_d(d_to_s(x, RngConfig::vdc(w), n)) == x);
    }
  }
  // Full-period Halton quantizes exactly as well when n is a base power.
  for (std::uint32_t x = 0; x <= 27; ++x) {
    CHECK(s_to_d(d_to_s(x, RngConfig::halton(3), 27)) == x);
  }
}

TEST_CASE("shared regeneration induces maximal positive correlation") {
  const std::size_t n = 256;
  const Bitstream a = d_to_s(99, RngConfig::halton(5), n);
  const Bitstream b = d_to_s(180, RngConfig::halton(7), n);
  const Bitstream c = d_to_s(23, RngConfig::lfsr(8, 5), n);
  CHECK(scc(a, b) != 1.0);

  const auto out = regenerate({a, b, c}, RngConfig::vdc(), /*shared=*/true);
  CHECK(out[0].ones() == a.ones());
  CHECK(out[1].ones() == b.ones());
  CHECK(out[2].ones() == c.ones());
  CHECK(scc(out[0], out[1]) == 1.0);
  CHECK(scc(out[0], out[2]) == 1.0);
  CHECK(scc(out[1], out[2]) == 1.0);
}

TEST_CASE("independent regeneration decorrelates") {
  // Stream 0 keeps the given generator (vdc), stream 1 moves to halton
  // base 3; over the full value sweep the mean correlation sits near zero.
  const int n = 256;
  double sum = 0;
  long used = 0;
  for (int xv = 1; xv < n; xv += 3) {
    for (int yv = 1; yv < n; yv += 3) {
      const Bitstream x0 = d_to_s(static_cast<std::uint32_t>(xv), RngConfig::vdc(), n);
      const Bitstream y0 = d_to_s(static_cast<std::uint32_t>(yv), RngConfig::vdc(), n);
      const auto out = regenerate({x0, y0}, RngConfig::vdc(), /*shared=*/false);
      if (out[0].constant() || out[1].constant()) continue;
      sum += scc(out[0], out[1]);
      ++used;
    }
  }
  CHECK(used > 6000);
  CHECK(std::fabs(sum / static_cast<double>(used)) <= 0.1);
}

TEST_CASE("regeneration preserves counts with exact generators") {
  std::mt19937 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Bitstream s = test::random_stream(rng, 128);
    const auto one = regenerate({s}, RngConfig::vdc(), false);
    CHECK(one[0].ones() == s.ones());
  }
  CHECK_THROWS_AS(regenerate({Bitstream(8), Bitstream(16)}, RngConfig::vdc(), true),
                  std::invalid_argument);
}

}  // TEST_SUITE

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "scsim/correlation.hpp"

using namespace scsim;

namespace {

// The canonical correlation triple: same values, opposite correlation.
const Bitstream kX = Bitstream::from_string("10101010");
const Bitstream kYPos = Bitstream::from_string("10111011");
const Bitstream kYNeg = Bitstream::from_string("11011101");
const Bitstream kYUnc = Bitstream::from_string("11111100");

}  // namespace

TEST_SUITE("correlation") {

TEST_CASE("positional counts") {
  SccCounts k = scc_counts(kX, kYPos);
  CHECK(k.a == 4);
  CHECK(k.b == 0);
  CHECK(k.c == 2);
  CHECK(k.d == 2);

  k = scc_counts(kX, kYNeg);
  CHECK(k.a == 2);
  CHECK(k.b == 2);
  CHECK(k.c == 4);
  CHECK(k.d == 0);

  k = scc_counts(kX, kX);
  CHECK(k.a == 4);
  CHECK(k.b == 0);
  CHECK(k.c == 0);
  CHECK(k.d == 4);

  CHECK_THROWS_AS(scc_counts(kX, Bitstream(9)), std::invalid_argument);
}

TEST_CASE("scc hits the extremes exactly") {
  CHECK(scc(kX, kYPos) == 1.0);
  CHECK(scc(kX, kYNeg) == -1.0);
  CHECK(scc(kX, kYUnc) == 0.0);
}

TEST_CASE("self and complement correlation") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Bitstream s = test::random_stream(rng, 64);
    if (s.constant()) s.set_bit(0, !s.bit(0));
    CHECK(scc(s, s) == 1.0);
    CHECK(scc(s, s.complement()) == -1.0);
  }
  // Zero-variance streams have no defined correlation; 0 by convention.
  CHECK(scc(Bitstream(16), Bitstream::from_string("1010101010101010")) == 0.0);
  CHECK(scc(Bitstream(16).complement(), Bitstream(16)) == 0.0);
}

TEST_CASE("symmetry, range, and marginal identities") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const Bitstream x = test::random_stream(rng, 128, density(rng));
    const Bitstream y = test::random_stream(rng, 128, density(rng));
    const SccCounts k = scc_counts(x, y);
    CHECK(k.a + k.b == static_cast<std::int64_t>(x.ones()));
    CHECK(k.a + k.c == static_cast<std::int64_t>(y.ones()));
    CHECK(k.n() == 128);
    const double sxy = scc(x, y);
    CHECK(sxy >= -1.0);
    CHECK(sxy <= 1.0);
    CHECK(sxy == scc(y, x));
  }
}

TEST_CASE("bias") {
  CHECK(bias(kX, kX, Encoding::Unipolar) == 0.0);
  CHECK(bias(Bitstream::from_string("00100000"), Bitstream::from_string("01100000"),
             Encoding::Unipolar) == -1.0 / 8);
  // value() is the oracle: 4/8 - 6/8.
  CHECK(bias(kX, kYPos, Encoding::Unipolar) ==
        value(kX, Encoding::Unipolar) - value(kYPos, Encoding::Unipolar));
  CHECK(bias(kX, kYPos, Encoding::Unipolar) == -0.25);
  CHECK_THROWS_AS(bias(kX, Bitstream(4), Encoding::Unipolar), std::invalid_argument);
}

TEST_CASE("abs_error") {
  CHECK(abs_error(0.375, 0.375) == 0.0);
  CHECK(abs_error(0.5, 0.75) == 0.25);
  const double product = value(kX, Encoding::Unipolar) * value(kYUnc, Encoding::Unipolar);
  CHECK(abs_error(value(kX & kYUnc, Encoding::Unipolar), product) == 0.0);
}

}  // TEST_SUITE

#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <random>

#include "scsim/image.hpp"

using namespace scsim;

namespace {

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("scsim_test_" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("image") {

TEST_CASE("binary pgm round trip is bit exact") {
  std::mt19937 rng(61);
  GrayImage img(37, 23);
  for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng() & 0xff);

  TempPath tmp("roundtrip.pgm");
  write_pgm(img, tmp.path);
  CHECK(read_pgm(tmp.path) == img);

  write_pgm(img, tmp.path);  // second write produces the identical file
  std::ifstream f(tmp.path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(bytes.size() == img.pixels.size() + std::string("P5\n37 23\n255\n").size());
}

TEST_CASE("ascii pgm with comments") {
  TempPath tmp("ascii.pgm");
  {
    std::ofstream f(tmp.path);
    f << "P2\n# a comment line\n3 2\n255\n0 10 20\n# another\n30 40 255\n";
  }
  const GrayImage img = read_pgm(tmp.path);
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.at(0, 0) == 0);
  CHECK(img.at(0, 2) == 20);
  CHECK(img.at(1, 2) == 255);
}

TEST_CASE("malformed files are rejected with context") {
  TempPath tmp("bad.pgm");
  {
    std::ofstream f(tmp.path);
    f << "P6\n2 2\n255\nxxxx";
  }
  CHECK_THROWS_WITH_AS(read_pgm(tmp.path), doctest::Contains(tmp.path.c_str()),
                       std::runtime_error);
  {
    std::ofstream f(tmp.path, std::ios::binary);
    f << "P5\n2 2\n65535\n";
  }
  CHECK_THROWS_AS(read_pgm(tmp.path), std::runtime_error);
  {
    std::ofstream f(tmp.path, std::ios::binary);
    f << "P5\n4 4\n255\nab";  // truncated raster
  }
  CHECK_THROWS_AS(read_pgm(tmp.path), std::runtime_error);
  CHECK_THROWS_AS(read_pgm("scsim_test_does_not_exist.pgm"), std::runtime_error);
}

TEST_CASE("clamped reads extend the borders") {
  GrayImage img(2, 2);
  img.at(0, 0) = 1;
  img.at(0, 1) = 2;
  img.at(1, 0) = 3;
  img.at(1, 1) = 4;
  CHECK(img.clamped(-5, -5) == 1);
  CHECK(img.clamped(0, 7) == 2);
  CHECK(img.clamped(9, -1) == 3);
  CHECK(img.clamped(9, 9) == 4);
}

TEST_CASE("test pattern is deterministic") {
  const GrayImage a = make_test_image(64, 64);
  const GrayImage b = make_test_image(64, 64);
  CHECK(a == b);
  CHECK(a.width == 64);
  CHECK(a.height == 64);
  CHECK_THROWS_AS(make_test_image(2, 2), std::invalid_argument);
}

}  // TEST_SUITE

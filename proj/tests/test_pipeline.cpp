#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "scsim/convert.hpp"
#include "scsim/pipeline.hpp"

using namespace scsim;

namespace {

GrayImage constant_image(int w, int h, std::uint8_t v) {
  GrayImage img(w, h);
  for (auto& px : img.pixels) px = v;
  return img;
}

GrayImage random_image(std::mt19937& rng, int w, int h) {
  GrayImage img(w, h);
  for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng() & 0xff);
  return img;
}

PipelineConfig small_config(Variant v) {
  PipelineConfig cfg;
  cfg.n = 64;
  cfg.tile = 5;
  cfg.variant = v;
  return cfg;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("reference: constant image has no edges") {
  const auto edges = reference_pipeline(constant_image(16, 12, 137));
  for (double e : edges) CHECK(e == 0.0);
}

TEST_CASE("reference: linear ramp has constant interior edge magnitude") {
  GrayImage img(32, 16);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      img.at(r, c) = static_cast<std::uint8_t>(4 * c);
    }
  }
  const auto edges = reference_pipeline(img);
  const double slope = 4.0 / 255.0;  // per-column step on the [0,1] scale
  for (int r = 2; r < img.height - 2; ++r) {
    for (int c = 2; c < img.width - 2; ++c) {
      CHECK(edges[static_cast<std::size_t>(r) * img.width + c] ==
            doctest::Approx(slope).epsilon(1e-9));
    }
  }
}

TEST_CASE("reference is idempotent") {
  const GrayImage img = make_test_image(24, 24);
  CHECK(reference_pipeline(img) == reference_pipeline(img));
}

TEST_CASE("all-black image maps to all-black output with zero error") {
  for (Variant v : {Variant::None, Variant::Regen, Variant::Sync}) {
    const PipelineResult r = run_pipeline(constant_image(15, 15, 0), small_config(v));
    CHECK(r.report.mae == 0.0);
    for (auto px : r.image.pixels) CHECK(px == 0);
  }
}

TEST_CASE("constant image yields identical blurred streams and zero edges") {
  const PipelineResult r = run_pipeline(constant_image(12, 12, 128), small_config(Variant::None));
  CHECK(r.report.mae == 0.0);
  for (auto px : r.image.pixels) CHECK(px == 0);
}

TEST_CASE("blur mux accuracy against the exact convolution") {
  // Random 3x3 neighborhoods, one output pixel each.
  std::mt19937 rng(67);
  const int n = 256;
  const auto tables = make_tap_tables(PipelineConfig{}.tap_bases, n);
  std::vector<std::uint32_t> select(n);
  RngStream sel(RngConfig::vdc(4), 16);
  for (auto& v : select) v = sel.next();

  const double kernel[9] = {1, 2, 1, 2, 4, 2, 1, 2, 1};
  double err_sum = 0;
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    const GrayImage patch = random_image(rng, 3, 3);
    const TapStreams taps = gather_tap_streams(patch, 0, 0, 3, 3, tables);
    const StreamGrid blurred = gaussian_blur_sc(taps, select);
    const double sc = static_cast<double>(blurred.at(0, 0).ones()) / n;
    double exact = 0;
    for (int k = 0; k < 9; ++k) exact += kernel[k] / 16.0 * (patch.pixels[k] / 255.0);
    err_sum += std::fabs(sc - exact);
  }
  CHECK(err_sum / cases <= 0.02);
}

TEST_CASE("vdc select picks every mux leg exactly n/16 times") {
  const int n = 256;
  RngStream sel(RngConfig::vdc(4), 16);
  std::array<int, 16> counts{};
  for (int t = 0; t < n; ++t) ++counts[sel.next()];
  for (int leg = 0; leg < 16; ++leg) CHECK(counts[static_cast<std::size_t>(leg)] == 16);
}

TEST_CASE("ideal step edge reads close to full scale") {
  const int n = 256;
  StreamGrid blurred(2, 2);
  blurred.at(0, 0) = Bitstream(n);
  blurred.at(0, 1) = Bitstream(n);
  blurred.at(1, 0) = Bitstream(n).complement();
  blurred.at(1, 1) = Bitstream(n).complement();
  const Bitstream ed_sel = half_density_select(RngConfig::lfsr(8, 101), n);
  const StreamGrid edges =
      roberts_cross_sc(blurred, Variant::Sync, 1, ed_sel, RngConfig::vdc());
  CHECK(static_cast<double>(edges.at(0, 0).ones()) / n >= 0.98);
}

TEST_CASE("variant error ordering holds across images") {
  std::mt19937 rng(71);
  const GrayImage images[] = {make_test_image(30, 30), random_image(rng, 25, 20)};
  for (const GrayImage& img : images) {
    const double none = run_pipeline(img, small_config(Variant::None)).report.mae;
    const double regen = run_pipeline(img, small_config(Variant::Regen)).report.mae;
    const double sync = run_pipeline(img, small_config(Variant::Sync)).report.mae;
    CHECK(none > regen);
    CHECK(none > sync);
    CHECK(std::fabs(sync - regen) < 0.02);
  }
}

TEST_CASE("pipeline is deterministic and thread-count independent") {
  std::mt19937 rng(73);
  int pixel_checks = 0;
  for (int i = 0; i < 20; ++i) {
    const GrayImage img = random_image(rng, 16, 16);
    for (Variant v : {Variant::Regen, Variant::Sync}) {
      PipelineConfig cfg = small_config(v);
      const PipelineResult a = run_pipeline(img, cfg);
      const PipelineResult b = run_pipeline(img, cfg);
      cfg.parallel = false;
      const PipelineResult serial = run_pipeline(img, cfg);
      REQUIRE(a.image.pixels.size() == b.image.pixels.size());
      for (std::size_t p = 0; p < a.image.pixels.size(); ++p) {
        CHECK(a.image.pixels[p] == b.image.pixels[p]);
        CHECK(a.image.pixels[p] == serial.image.pixels[p]);
        ++pixel_checks;
      }
      CHECK(a.report.mae == b.report.mae);
      CHECK(a.report.mae == serial.report.mae);
    }
  }
  CHECK(pixel_checks >= 10000);
}

TEST_CASE("ragged tiles cover the whole image") {
  // 17x13 with tile 5 leaves partial tiles on both axes.
  const GrayImage img = make_test_image(17, 13);
  const PipelineResult r = run_pipeline(img, small_config(Variant::Sync));
  CHECK(r.image.width == 17);
  CHECK(r.image.height == 13);
  const auto ref = reference_pipeline(img);
  double worst = 0;
  for (std::size_t p = 0; p < ref.size(); ++p) {
    worst = std::max(worst, std::fabs(ref[p] - r.image.pixels[p] / 255.0));
  }
  CHECK(worst < 0.25);  // sanity: every pixel was actually produced
}

TEST_CASE("config validation") {
  const GrayImage img = make_test_image(8, 8);
  PipelineConfig cfg = small_config(Variant::Sync);
  cfg.tile = 1;
  CHECK_THROWS_AS(run_pipeline(img, cfg), std::invalid_argument);
  cfg = small_config(Variant::Sync);
  cfg.depth = 0;
  CHECK_THROWS_AS(run_pipeline(img, cfg), std::invalid_argument);
  cfg = small_config(Variant::Regen);
  cfg.n = 100;  // vdc regeneration needs a power of two
  CHECK_THROWS_AS(run_pipeline(img, cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_pipeline(GrayImage{}, small_config(Variant::Sync)),
                  std::invalid_argument);
}

TEST_CASE("report json carries the expected fields") {
  PipelineReport rep;
  rep.variant = Variant::Regen;
  rep.n = 64;
  rep.tile = 5;
  rep.mae = 0.0125;
  rep.psnr = 30.5;
  rep.seconds = 0.25;
  const std::string j = report_json(rep);
  CHECK(j.find("\"variant\":\"regen\"") != std::string::npos);
  CHECK(j.find("\"n\":64") != std::string::npos);
  CHECK(j.find("\"tile\":5") != std::string::npos);
  CHECK(j.find("\"mae\":") != std::string::npos);
  CHECK(j.find("\"psnr\":") != std::string::npos);
  CHECK(j.find("\"seconds\":") != std::string::npos);
  rep.psnr = std::numeric_limits<double>::infinity();
  CHECK(report_json(rep).find("\"psnr\":null") != std::string::npos);
}

}  // TEST_SUITE

#include "scsim/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "scsim/convert.hpp"
#include "scsim/correlate.hpp"
#include "scsim/gates.hpp"

namespace scsim {

Variant parse_variant(const std::string& name) {
  if (name == "none") return Variant::None;
  if (name == "regen") return Variant::Regen;
  if (name == "sync") return Variant::Sync;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::None: return "none";
    case Variant::Regen: return "regen";
    case Variant::Sync: return "sync";
  }
  return "?";
}

namespace {

// Mux leg -> kernel tap, with multiplicity equal to the binomial weights
// [1 2 1; 2 4 2; 1 2 1].
constexpr std::array<int, 16> kLegTap = {0, 1, 1, 2, 3, 4, 4, 5, 4, 4, 6, 7, 7, 8, 3, 5};

constexpr std::array<double, 9> kKernel = {1.0 / 16, 2.0 / 16, 1.0 / 16, 2.0 / 16, 4.0 / 16,
                                           2.0 / 16, 1.0 / 16, 2.0 / 16, 1.0 / 16};

std::uint32_t pixel_threshold(std::uint8_t pixel, int n) {
  return static_cast<std::uint32_t>(std::lround(pixel * static_cast<double>(n) / 255.0));
}

}  // namespace

std::array<std::vector<Bitstream>, 9> make_tap_tables(const std::array<int, 9>& bases, int n) {
  std::array<std::vector<Bitstream>, 9> tables;
  for (int k = 0; k < 9; ++k) {
    auto& table = tables[static_cast<std::size_t>(k)];
    table.reserve(256);
    for (int px = 0; px < 256; ++px) {
      table.push_back(d_to_s(pixel_threshold(static_cast<std::uint8_t>(px), n),
                             RngConfig::halton(bases[static_cast<std::size_t>(k)]),
                             static_cast<std::size_t>(n)));
    }
  }
  return tables;
}

TapStreams gather_tap_streams(const GrayImage& img, int row0, int col0, int rows, int cols,
                              const std::array<std::vector<Bitstream>, 9>& tables) {
  TapStreams taps;
  for (int k = 0; k < 9; ++k) {
    StreamGrid grid(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        grid.at(r, c) = tables[static_cast<std::size_t>(k)][img.clamped(row0 + r, col0 + c)];
      }
    }
    taps[static_cast<std::size_t>(k)] = std::move(grid);
  }
  return taps;
}

StreamGrid gaussian_blur_sc(const TapStreams& taps, const std::vector<std::uint32_t>& select) {
  const int rows = taps[0].rows;
  const int cols = taps[0].cols;
  if (rows < 3 || cols < 3) throw std::invalid_argument("gaussian_blur_sc: halo too small");
  const std::size_t n = taps[0].at(0, 0).size();
  if (select.size() != n) throw std::invalid_argument("gaussian_blur_sc: select length mismatch");

  for (std::uint32_t leg : select) {
    if (leg >= 16) throw std::invalid_argument("gaussian_blur_sc: select value out of range");
  }

  StreamGrid out(rows - 2, cols - 2);
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < out.cols; ++j) {
      Bitstream z(n);
      for (std::size_t t = 0; t < n; ++t) {
        const int tap = kLegTap[select[t]];
        const int dr = tap / 3;
        const int dc = tap % 3;
        z.set_bit(t, taps[static_cast<std::size_t>(tap)].at(i + dr, j + dc).bit(t));
      }
      out.at(i, j) = std::move(z);
    }
  }
  return out;
}

StreamGrid roberts_cross_sc(const StreamGrid& blurred, Variant variant, int depth,
                            const Bitstream& ed_select, const RngConfig& regen_rng) {
  if (blurred.rows < 2 || blurred.cols < 2) {
    throw std::invalid_argument("roberts_cross_sc: need a 2x2 stream neighborhood");
  }

  const StreamGrid* grid = &blurred;
  StreamGrid regenerated;
  if (variant == Variant::Regen) {
    regenerated = blurred;
    regenerated.streams = regenerate(blurred.streams, regen_rng, /*shared=*/true);
    grid = &regenerated;
  }

  StreamGrid out(grid->rows - 1, grid->cols - 1);
  const StageConfig sync_stage{StageKind::Synchronizer, depth, 0};
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < out.cols; ++j) {
      Bitstream d1;
      Bitstream d2;
      if (variant == Variant::Sync) {
        const StreamPair a = run_pairwise(sync_stage, grid->at(i, j), grid->at(i + 1, j + 1));
        const StreamPair b = run_pairwise(sync_stage, grid->at(i, j + 1), grid->at(i + 1, j));
        d1 = sub_correlated(a.x, a.y);
        d2 = sub_correlated(b.x, b.y);
      } else {
        d1 = sub_correlated(grid->at(i, j), grid->at(i + 1, j + 1));
        d2 = sub_correlated(grid->at(i, j + 1), grid->at(i + 1, j));
      }
      out.at(i, j) = scaled_add(d1, d2, ed_select);
    }
  }
  return out;
}

namespace {

double reference_blur(const GrayImage& img, int i, int j) {
  double acc = 0;
  for (int k = 0; k < 9; ++k) {
    acc += kKernel[static_cast<std::size_t>(k)] *
           (img.clamped(i - 1 + k / 3, j - 1 + k % 3) / 255.0);
  }
  return acc;
}

}  // namespace

std::vector<double> reference_pipeline(const GrayImage& img) {
  if (img.width <= 0 || img.height <= 0) {
    throw std::invalid_argument("reference_pipeline: empty image");
  }
  // Blur evaluated on a (height+1) x (width+1) grid so the edge stencil can
  // look one position past each border, matching what the tile halo does.
  const int bh = img.height + 1;
  const int bw = img.width + 1;
  std::vector<double> blur(static_cast<std::size_t>(bh) * bw);
  for (int i = 0; i < bh; ++i) {
    for (int j = 0; j < bw; ++j) {
      blur[static_cast<std::size_t>(i) * bw + j] = reference_blur(img, i, j);
    }
  }
  auto b = [&](int i, int j) { return blur[static_cast<std::size_t>(i) * bw + j]; };

  std::vector<double> edges(static_cast<std::size_t>(img.height) * img.width);
  for (int i = 0; i < img.height; ++i) {
    for (int j = 0; j < img.width; ++j) {
      edges[static_cast<std::size_t>(i) * img.width + j] =
          0.5 * (std::fabs(b(i, j) - b(i + 1, j + 1)) + std::fabs(b(i, j + 1) - b(i + 1, j)));
    }
  }
  return edges;
}

PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg) {
  // Everything that can reject a config must do so here: the tile loop body
  // runs inside an OpenMP region where an exception could not propagate.
  if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("run_pipeline: empty image");
  if (cfg.tile < 2) throw std::invalid_argument("run_pipeline: tile must be >= 2");
  if (cfg.n < 8) throw std::invalid_argument("run_pipeline: n must be >= 8");
  if (cfg.depth < 1) throw std::invalid_argument("run_pipeline: depth must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  const int n = cfg.n;

  const auto tables = make_tap_tables(cfg.tap_bases, n);
  std::vector<std::uint32_t> gb_select(static_cast<std::size_t>(n));
  {
    RngStream sel(cfg.gb_select, 16);
    for (auto& v : gb_select) v = sel.next();
  }
  const Bitstream ed_select = half_density_select(cfg.ed_select, static_cast<std::size_t>(n));
  if (cfg.variant == Variant::Regen) {
    RngStream check(cfg.regen_rng, static_cast<std::uint32_t>(n));  // validates the config
  }

  const int tiles_r = (img.height + cfg.tile - 1) / cfg.tile;
  const int tiles_c = (img.width + cfg.tile - 1) / cfg.tile;
  const int tile_count = tiles_r * tiles_c;

  GrayImage out(img.width, img.height);
  std::vector<double> sc_values(static_cast<std::size_t>(img.width) * img.height);

#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (int tidx = 0; tidx < tile_count; ++tidx) {
    const int r0 = (tidx / tiles_c) * cfg.tile;
    const int c0 = (tidx % tiles_c) * cfg.tile;
    const int th = std::min(cfg.tile, img.height - r0);
    const int tw = std::min(cfg.tile, img.width - c0);

    // Halo: the edge stencil needs blurred rows r0 .. r0+th, and each
    // blurred row pulls one input row on either side.
    const TapStreams taps = gather_tap_streams(img, r0 - 1, c0 - 1, th + 3, tw + 3, tables);
    const StreamGrid blurred = gaussian_blur_sc(taps, gb_select);
    const StreamGrid edges =
        roberts_cross_sc(blurred, cfg.variant, cfg.depth, ed_select, cfg.regen_rng);

    for (int i = 0; i < th; ++i) {
      for (int j = 0; j < tw; ++j) {
        const std::size_t count = s_to_d(edges.at(i, j));
        const std::size_t px = static_cast<std::size_t>(r0 + i) * img.width + (c0 + j);
        sc_values[px] = static_cast<double>(count) / n;
        out.pixels[px] = static_cast<std::uint8_t>(std::lround(count * 255.0 / n));
      }
    }
  }

  const std::vector<double> ref = reference_pipeline(img);
  double abs_sum = 0;
  double sq_sum = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double e = sc_values[i] - ref[i];
    abs_sum += std::fabs(e);
    sq_sum += e * e;
  }
  const double count = static_cast<double>(ref.size());
  const double mse = sq_sum / count;

  PipelineReport report;
  report.variant = cfg.variant;
  report.n = cfg.n;
  report.tile = cfg.tile;
  report.mae = abs_sum / count;
  report.psnr = mse > 0 ? -10.0 * std::log10(mse) : std::numeric_limits<double>::infinity();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return PipelineResult{std::move(out), report};
}

std::string report_json(const PipelineReport& report) {
  nlohmann::json j;
  j["variant"] = variant_name(report.variant);
  j["n"] = report.n;
  j["tile"] = report.tile;
  j["mae"] = report.mae;
  if (std::isfinite(report.psnr)) {
    j["psnr"] = report.psnr;
  } else {
    j["psnr"] = nullptr;
  }
  j["seconds"] = report.seconds;
  return j.dump();
}

}  // namespace scsim

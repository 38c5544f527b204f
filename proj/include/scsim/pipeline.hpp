#pragma once

#include <array>
#include <string>
#include <vector>

#include "scsim/bitstream.hpp"
#include "scsim/image.hpp"
#include "scsim/rng.hpp"

namespace scsim {

/// Correlation handling between the blur and the edge detector.
enum class Variant { None, Regen, Sync };

Variant parse_variant(const std::string& name);
std::string variant_name(Variant v);

struct PipelineConfig {
  int n = 256;    // stream length; power of two when VDC generators are used
  int tile = 10;  // output tile edge
  Variant variant = Variant::Sync;
  int depth = 1;  // synchronizer save depth for the Sync variant

  // One Halton base per 3x3 kernel tap: within a window the nine taps are
  // mutually uncorrelated, while the same tap role reuses its generator
  // across windows (one generator per mux leg position, as built).
  std::array<int, 9> tap_bases{3, 5, 7, 11, 13, 17, 19, 23, 29};
  RngConfig gb_select = RngConfig::vdc(4);       // 16-way mux select
  RngConfig ed_select = RngConfig::lfsr(8, 101);  // half-density add select
  RngConfig regen_rng = RngConfig::vdc();        // shared regeneration
  bool parallel = true;                          // tiles fan out over OpenMP
};

struct PipelineReport {
  Variant variant = Variant::Sync;
  int n = 0;
  int tile = 0;
  double mae = 0;      // mean |sc - reference| on the [0,1] scale
  double psnr = 0;     // dB; infinity when the error is exactly zero
  double seconds = 0;  // wall-clock processing time
};

struct PipelineResult {
  GrayImage image;
  PipelineReport report;
};

/// Rectangular grid of bitstreams (row-major).
struct StreamGrid {
  int rows = 0;
  int cols = 0;
  std::vector<Bitstream> streams;

  StreamGrid() = default;
  StreamGrid(int r, int c) : rows(r), cols(c), streams(static_cast<std::size_t>(r) * c) {}

  const Bitstream& at(int r, int c) const {
    return streams[static_cast<std::size_t>(r) * cols + c];
  }
  Bitstream& at(int r, int c) { return streams[static_cast<std::size_t>(r) * cols + c]; }
};

/// One stream grid per kernel tap role; taps[k].at(r,c) encodes the pixel at
/// halo position (r,c) with tap k's generator.
using TapStreams = std::array<StreamGrid, 9>;

/// Per-tap encoding tables: tables[k][pixel] is the stream for that 8-bit
/// pixel under tap k's generator with threshold round(pixel * n / 255).
std::array<std::vector<Bitstream>, 9> make_tap_tables(const std::array<int, 9>& bases, int n);

/// Collects the halo patch starting at image position (row0, col0)
/// (clamp-to-edge; coordinates may run past the borders) as tap streams.
TapStreams gather_tap_streams(const GrayImage& img, int row0, int col0, int rows, int cols,
                              const std::array<std::vector<Bitstream>, 9>& tables);

/// 3x3 binomial blur ([1 2 1; 2 4 2; 1 2 1]/16) as a 16-way mux over
/// duplicated neighbor streams; `select` holds one leg index in [0,16) per
/// cycle and is shared by every window. Halo grids of rows x cols streams
/// yield (rows-2) x (cols-2) blurred streams.
StreamGrid gaussian_blur_sc(const TapStreams& taps, const std::vector<std::uint32_t>& select);

/// Roberts cross 0.5*(|a-d| + |b-c|) over 2x2 neighborhoods of blurred
/// streams via correlated XOR pairs and a scaled add. The variant decides
/// what restores positive correlation first: nothing, shared-sequence
/// regeneration, or a synchronizer per XOR pair. (rows+1) x (cols+1)
/// blurred streams yield rows x cols edge streams.
StreamGrid roberts_cross_sc(const StreamGrid& blurred, Variant variant, int depth,
                            const Bitstream& ed_select, const RngConfig& regen_rng);

/// Floating-point reference: exact blur convolution (clamp-to-edge, also
/// evaluated one position past each border for the edge stencil) followed
/// by the exact Roberts formula on [0,1]-scaled pixels. Returns a
/// width x height row-major edge map.
std::vector<double> reference_pipeline(const GrayImage& img);

/// Runs the tiled accelerator model over the whole image and scores it
/// against reference_pipeline. Tiles are independent: processing order and
/// worker count do not change the result.
PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg);

/// Report rendered as a single-line JSON object.
std::string report_json(const PipelineReport& report);

}  // namespace scsim

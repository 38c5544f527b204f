#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scsim/bitstream.hpp"
#include "scsim/rng.hpp"

namespace scsim {

/// Exhaustive value sweeps behind the experiment CLI. Every kernel exists
/// twice: an OpenMP-parallel version and a plain serial reference. Both
/// fill the same per-pair row layout and reduce the summary from the rows
/// in index order, so their results are required to match bit for bit.

enum class CircuitKind { Synchronizer, Desynchronizer, Decorrelator, Isolator };

struct CorrelateSweep {
  CircuitKind circuit = CircuitKind::Synchronizer;
  int depth = 1;
  int stages = 1;
  bool flush = false;
  RngConfig rng_x = RngConfig::vdc();
  RngConfig rng_y = RngConfig::halton(3);
  // Decorrelator auxiliaries.
  RngConfig aux_a = RngConfig::halton(2);
  RngConfig aux_b = RngConfig::halton(3);
  int n = 256;
};

struct CorrelateRow {
  int x = 0;
  int y = 0;
  double input_scc = 0;
  double output_scc = 0;
  double bias_x = 0;
  double bias_y = 0;
  // False when any of the four streams is constant; such pairs have no
  // defined correlation and stay out of the summary means.
  bool used = false;
};

struct CorrelateSummary {
  std::int64_t pairs = 0;
  std::int64_t used = 0;
  double input_scc = 0;
  double output_scc = 0;
  double bias_x = 0;
  double bias_y = 0;
};

/// Runs the circuit over all value pairs (x, y) in [1, n-1]^2 (the constant
/// end points cannot carry correlation). Rows are optional; the summary
/// averages only rows flagged `used`.
CorrelateSummary sweep_correlate(const CorrelateSweep& cfg,
                                 std::vector<CorrelateRow>* rows = nullptr);
CorrelateSummary sweep_correlate_serial(const CorrelateSweep& cfg,
                                        std::vector<CorrelateRow>* rows = nullptr);

enum class OpKind {
  OrMax,
  SyncMax,
  AndMin,
  SyncMin,
  OrSatAdd,
  DesyncSatAdd,
  Mult,
  ScaledAdd,
  Sub,
};

OpKind parse_op(const std::string& name);
std::string op_name(OpKind op);

struct OpsSweep {
  OpKind op = OpKind::OrMax;
  int n = 256;
  int depth = 1;
  RngConfig rng_x = RngConfig::vdc();
  RngConfig rng_y = RngConfig::halton(3);
  RngConfig rng_sel = RngConfig::lfsr(8, 101);  // scaled-add select, p = 1/2
};

struct OpsRow {
  int x = 0;
  int y = 0;
  double measured = 0;
  double exact = 0;
  double error = 0;
};

struct OpsSummary {
  std::int64_t pairs = 0;
  double mean_abs_error = 0;
  double mean_bias = 0;  // mean(measured - exact)
};

/// Operator accuracy over all value pairs in [0, n]^2 against the exact
/// real-arithmetic result of the intended values.
OpsSummary sweep_ops(const OpsSweep& cfg, std::vector<OpsRow>* rows = nullptr);
OpsSummary sweep_ops_serial(const OpsSweep& cfg, std::vector<OpsRow>* rows = nullptr);

/// CSV output: header, one row per pair, and a trailing "mean" row with the
/// summary in the matching columns. Written atomically (temp file + rename);
/// reruns produce byte-identical files.
void write_correlate_csv(const std::string& path, const std::vector<CorrelateRow>& rows,
                         const CorrelateSummary& summary);
void write_ops_csv(const std::string& path, const std::vector<OpsRow>& rows,
                   const OpsSummary& summary);

}  // namespace scsim

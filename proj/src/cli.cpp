#include "scsim/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "scsim/convert.hpp"
#include "scsim/correlation.hpp"
#include "scsim/image.hpp"
#include "scsim/pipeline.hpp"
#include "scsim/sweep.hpp"

namespace scsim::cli {

namespace {

std::string fmt3(double v) {
  if (v == 0.0) return "0.000";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.3f", v);
  return buf;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Bitstream parse_stream_line(const std::string& line) {
  std::string trimmed = line;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                              trimmed.back() == ' ' || trimmed.back() == '\t')) {
    trimmed.pop_back();
  }
  if (trimmed.empty()) throw std::invalid_argument("empty bitstream line");
  return Bitstream::from_string(trimmed);
}

int cmd_gen(int n, int value, const std::string& rng_spec, std::ostream& out) {
  const RngConfig rng = RngConfig::parse(rng_spec);
  const Bitstream s = d_to_s(static_cast<std::uint32_t>(value),
                             rng, static_cast<std::size_t>(n));
  out << s.to_string() << '\n';
  return 0;
}

int cmd_scc(std::vector<std::string> streams, std::istream& in, std::ostream& out) {
  while (streams.size() < 2) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("scc: expected two bitstream lines");
    streams.push_back(line);
  }
  const Bitstream x = parse_stream_line(streams[0]);
  const Bitstream y = parse_stream_line(streams[1]);
  const SccCounts k = scc_counts(x, y);
  out << "a=" << k.a << " b=" << k.b << " c=" << k.c << " d=" << k.d << '\n';
  out << "scc=" << fmt3(scc(k)) << '\n';
  return 0;
}

int cmd_sweep_correlate(const CorrelateSweep& cfg, const std::string& out_path, bool serial,
                        std::ostream& out) {
  std::vector<CorrelateRow> rows;
  const CorrelateSummary s = serial ? sweep_correlate_serial(cfg, out_path.empty() ? nullptr : &rows)
                                    : sweep_correlate(cfg, out_path.empty() ? nullptr : &rows);
  if (!out_path.empty()) write_correlate_csv(out_path, rows, s);
  out << "pairs=" << s.pairs << " used=" << s.used << " input_scc=" << fmt(s.input_scc)
      << " output_scc=" << fmt(s.output_scc) << " bias_x=" << fmt(s.bias_x)
      << " bias_y=" << fmt(s.bias_y) << '\n';
  return 0;
}

int cmd_sweep_ops(const OpsSweep& cfg, const std::string& out_path, bool serial,
                  std::ostream& out) {
  std::vector<OpsRow> rows;
  const OpsSummary s = serial ? sweep_ops_serial(cfg, out_path.empty() ? nullptr : &rows)
                              : sweep_ops(cfg, out_path.empty() ? nullptr : &rows);
  if (!out_path.empty()) write_ops_csv(out_path, rows, s);
  out << "op=" << op_name(cfg.op) << " pairs=" << s.pairs
      << " mean_abs_error=" << fmt(s.mean_abs_error) << " mean_bias=" << fmt(s.mean_bias) << '\n';
  return 0;
}

int cmd_pipeline(const PipelineConfig& cfg, const std::string& image_path,
                 const std::string& out_path, const std::string& report_path,
                 std::ostream& out) {
  const GrayImage img = image_path.empty() ? make_test_image(64, 64) : read_pgm(image_path);
  const PipelineResult result = run_pipeline(img, cfg);
  if (!out_path.empty()) write_pgm(result.image, out_path);
  const std::string json = report_json(result.report);
  if (!report_path.empty()) {
    const std::string tmp = report_path + ".tmp";
    {
      std::ofstream f(tmp);
      if (!f) throw std::runtime_error(report_path + ": cannot open for writing");
      f << json << '\n';
      if (!f) {
        std::remove(tmp.c_str());
        throw std::runtime_error(report_path + ": write failed");
      }
    }
    if (std::rename(tmp.c_str(), report_path.c_str()) != 0) {
      std::remove(tmp.c_str());
      throw std::runtime_error(report_path + ": rename failed");
    }
  }
  out << json << '\n';
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"stochastic-computing bitstream circuit simulator"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit one stream as a '0'/'1' line");
  int gen_n = 256;
  int gen_value = 0;
  std::string gen_rng = "vdc";
  gen->add_option("--n", gen_n, "stream length")->check(CLI::PositiveNumber);
  gen->add_option("--value", gen_value, "digital value in [0, n]")->required();
  gen->add_option("--rng", gen_rng, "generator spec, e.g. lfsr:w=8,seed=1 | vdc:w=8 | halton:base=3");

  // scc
  auto* sccc = app.add_subcommand("scc", "correlation of two streams (args or stdin lines)");
  std::vector<std::string> scc_streams;
  sccc->add_option("streams", scc_streams, "two '0'/'1' lines")->expected(0, 2);

  // sweep-correlate
  auto* swc = app.add_subcommand("sweep-correlate",
                                 "exhaustive value sweep through a correlation circuit");
  std::string swc_circuit = "sync";
  std::string swc_rng_x = "vdc";
  std::string swc_rng_y = "halton:base=3";
  std::string swc_aux_a = "halton:base=2";
  std::string swc_aux_b = "halton:base=3";
  std::string swc_out;
  CorrelateSweep swc_cfg;
  bool swc_serial = false;
  swc->add_option("--circuit", swc_circuit, "sync|desync|decorr|isolator");
  swc->add_option("--depth", swc_cfg.depth, "save/buffer depth")->check(CLI::PositiveNumber);
  swc->add_option("--stages", swc_cfg.stages, "series stages")->check(CLI::PositiveNumber);
  swc->add_flag("--flush", swc_cfg.flush, "flush saved bits near the stream end");
  swc->add_option("--rng-x", swc_rng_x, "generator for X streams");
  swc->add_option("--rng-y", swc_rng_y, "generator for Y streams");
  swc->add_option("--aux-a", swc_aux_a, "decorrelator auxiliary for X");
  swc->add_option("--aux-b", swc_aux_b, "decorrelator auxiliary for Y");
  swc->add_option("--n", swc_cfg.n, "stream length")->check(CLI::PositiveNumber);
  swc->add_option("--out", swc_out, "per-pair CSV path");
  swc->add_flag("--serial", swc_serial, "use the serial reference kernel");

  // sweep-ops
  auto* swo = app.add_subcommand("sweep-ops", "operator accuracy sweep over all value pairs");
  std::string swo_op = "or-max";
  std::string swo_rng_x = "vdc";
  std::string swo_rng_y = "halton:base=3";
  std::string swo_rng_sel = "lfsr:w=8,seed=101";
  std::string swo_out;
  OpsSweep swo_cfg;
  bool swo_serial = false;
  swo->add_option("--op", swo_op,
                  "or-max|sync-max|and-min|sync-min|or-satadd|desync-satadd|mult|scaled-add|sub");
  swo->add_option("--n", swo_cfg.n, "stream length")->check(CLI::PositiveNumber);
  swo->add_option("--depth", swo_cfg.depth, "save depth")->check(CLI::PositiveNumber);
  swo->add_option("--rng-x", swo_rng_x, "generator for X streams");
  swo->add_option("--rng-y", swo_rng_y, "generator for Y streams");
  swo->add_option("--rng-sel", swo_rng_sel, "generator for the scaled-add select");
  swo->add_option("--out", swo_out, "per-pair CSV path");
  swo->add_flag("--serial", swo_serial, "use the serial reference kernel");

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "blur + edge-detect accelerator model");
  std::string pl_variant = "sync";
  std::string pl_image;
  std::string pl_out;
  std::string pl_report;
  PipelineConfig pl_cfg;
  bool pl_serial = false;
  pl->add_option("--variant", pl_variant, "none|regen|sync");
  pl->add_option("--n", pl_cfg.n, "stream length")->check(CLI::PositiveNumber);
  pl->add_option("--tile", pl_cfg.tile, "output tile edge")->check(CLI::PositiveNumber);
  pl->add_option("--depth", pl_cfg.depth, "synchronizer save depth")->check(CLI::PositiveNumber);
  pl->add_option("--image", pl_image, "input PGM (P2/P5); default: built-in 64x64 test pattern");
  pl->add_option("--out", pl_out, "output PGM path");
  pl->add_option("--report", pl_report, "JSON report path");
  pl->add_flag("--serial", pl_serial, "process tiles on one thread");

  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_value, gen_rng, out);
    if (sccc->parsed()) return cmd_scc(scc_streams, in, out);
    if (swc->parsed()) {
      if (swc_circuit == "sync") {
        swc_cfg.circuit = CircuitKind::Synchronizer;
      } else if (swc_circuit == "desync") {
        swc_cfg.circuit = CircuitKind::Desynchronizer;
      } else if (swc_circuit == "decorr") {
        swc_cfg.circuit = CircuitKind::Decorrelator;
      } else if (swc_circuit == "isolator") {
        swc_cfg.circuit = CircuitKind::Isolator;
      } else {
        throw std::invalid_argument("unknown circuit '" + swc_circuit + "'");
      }
      swc_cfg.rng_x = RngConfig::parse(swc_rng_x);
      swc_cfg.rng_y = RngConfig::parse(swc_rng_y);
      swc_cfg.aux_a = RngConfig::parse(swc_aux_a);
      swc_cfg.aux_b = RngConfig::parse(swc_aux_b);
      return cmd_sweep_correlate(swc_cfg, swc_out, swc_serial, out);
    }
    if (swo->parsed()) {
      swo_cfg.op = parse_op(swo_op);
      swo_cfg.rng_x = RngConfig::parse(swo_rng_x);
      swo_cfg.rng_y = RngConfig::parse(swo_rng_y);
      swo_cfg.rng_sel = RngConfig::parse(swo_rng_sel);
      return cmd_sweep_ops(swo_cfg, swo_out, swo_serial, out);
    }
    if (pl->parsed()) {
      pl_cfg.variant = parse_variant(pl_variant);
      pl_cfg.parallel = !pl_serial;
      return cmd_pipeline(pl_cfg, pl_image, pl_out, pl_report, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace scsim::cli

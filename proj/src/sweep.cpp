#include "scsim/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "scsim/convert.hpp"
#include "scsim/correlate.hpp"
#include "scsim/correlation.hpp"
#include "scsim/gates.hpp"
#include "scsim/ops.hpp"

namespace scsim {

namespace {

// One stream per value in [lo, hi], all from the same generator config.
std::vector<Bitstream> stream_table(const RngConfig& cfg, int n, int lo, int hi) {
  std::vector<Bitstream> table;
  table.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int v = lo; v <= hi; ++v) {
    table.push_back(d_to_s(static_cast<std::uint32_t>(v), cfg, static_cast<std::size_t>(n)));
  }
  return table;
}

CorrelateRow eval_correlate_pair(const CorrelateSweep& cfg, int xv, int yv,
                                 const Bitstream& x, const Bitstream& y) {
  StreamPair out;
  switch (cfg.circuit) {
    case CircuitKind::Synchronizer:
    case CircuitKind::Desynchronizer: {
      const StageKind kind = cfg.circuit == CircuitKind::Synchronizer
                                 ? StageKind::Synchronizer
                                 : StageKind::Desynchronizer;
      std::vector<StageConfig> stages(static_cast<std::size_t>(cfg.stages),
                                      StageConfig{kind, cfg.depth, 0});
      out = run_pairwise(stages, x, y, cfg.flush);
      break;
    }
    case CircuitKind::Decorrelator:
      out = StreamPair{x, y};
      for (int i = 0; i < cfg.stages; ++i) {
        out = decorrelate(out.x, out.y, cfg.depth, cfg.aux_a, cfg.aux_b);
      }
      break;
    case CircuitKind::Isolator: {
      Bitstream dx = x;
      for (int i = 0; i < cfg.stages; ++i) dx = isolator(dx, false);
      out = StreamPair{std::move(dx), y};
      break;
    }
  }
  CorrelateRow row;
  row.x = xv;
  row.y = yv;
  row.input_scc = scc(x, y);
  row.output_scc = scc(out.x, out.y);
  row.bias_x = bias(out.x, x, Encoding::Unipolar);
  row.bias_y = bias(out.y, y, Encoding::Unipolar);
  row.used = !x.constant() && !y.constant() && !out.x.constant() && !out.y.constant();
  return row;
}

// The summary is reduced serially from the row array in index order, so it
// is identical no matter how the rows were computed.
CorrelateSummary reduce_correlate(const std::vector<CorrelateRow>& rows) {
  CorrelateSummary s;
  s.pairs = static_cast<std::int64_t>(rows.size());
  for (const CorrelateRow& r : rows) {
    if (!r.used) continue;
    ++s.used;
    s.input_scc += r.input_scc;
    s.output_scc += r.output_scc;
    s.bias_x += r.bias_x;
    s.bias_y += r.bias_y;
  }
  if (s.used > 0) {
    const double inv = 1.0 / static_cast<double>(s.used);
    s.input_scc *= inv;
    s.output_scc *= inv;
    s.bias_x *= inv;
    s.bias_y *= inv;
  }
  return s;
}

void validate_correlate(const CorrelateSweep& cfg) {
  // Rejections must happen before the pair loop: inside the OpenMP region an
  // exception could not propagate.
  if (cfg.n < 4) throw std::invalid_argument("sweep: n must be >= 4");
  if (cfg.depth < 1) throw std::invalid_argument("sweep: depth must be >= 1");
  if (cfg.stages < 1) throw std::invalid_argument("sweep: stages must be >= 1");
  if (cfg.circuit == CircuitKind::Decorrelator) {
    decorrelate(Bitstream(4), Bitstream(4), cfg.depth, cfg.aux_a, cfg.aux_b);  // pre-flight
  }
}

}  // namespace

CorrelateSummary sweep_correlate(const CorrelateSweep& cfg, std::vector<CorrelateRow>* rows_out) {
  validate_correlate(cfg);
  const int lo = 1;
  const int count = cfg.n - 1;
  const auto xs = stream_table(cfg.rng_x, cfg.n, lo, cfg.n - 1);
  const auto ys = stream_table(cfg.rng_y, cfg.n, lo, cfg.n - 1);

  std::vector<CorrelateRow> rows(static_cast<std::size_t>(count) * count);
  const std::int64_t total = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const int xi = static_cast<int>(idx / count);
    const int yi = static_cast<int>(idx % count);
    rows[static_cast<std::size_t>(idx)] =
        eval_correlate_pair(cfg, lo + xi, lo + yi, xs[static_cast<std::size_t>(xi)],
                            ys[static_cast<std::size_t>(yi)]);
  }

  CorrelateSummary summary = reduce_correlate(rows);
  if (rows_out != nullptr) *rows_out = std::move(rows);
  return summary;
}

CorrelateSummary sweep_correlate_serial(const CorrelateSweep& cfg,
                                        std::vector<CorrelateRow>* rows_out) {
  validate_correlate(cfg);
  const int lo = 1;
  const int count = cfg.n - 1;
  const auto xs = stream_table(cfg.rng_x, cfg.n, lo, cfg.n - 1);
  const auto ys = stream_table(cfg.rng_y, cfg.n, lo, cfg.n - 1);

  std::vector<CorrelateRow> rows;
  rows.reserve(static_cast<std::size_t>(count) * count);
  for (int xi = 0; xi < count; ++xi) {
    for (int yi = 0; yi < count; ++yi) {
      rows.push_back(eval_correlate_pair(cfg, lo + xi, lo + yi, xs[static_cast<std::size_t>(xi)],
                                         ys[static_cast<std::size_t>(yi)]));
    }
  }

  CorrelateSummary summary = reduce_correlate(rows);
  if (rows_out != nullptr) *rows_out = std::move(rows);
  return summary;
}

OpKind parse_op(const std::string& name) {
  if (name == "or-max") return OpKind::OrMax;
  if (name == "sync-max") return OpKind::SyncMax;
  if (name == "and-min") return OpKind::AndMin;
  if (name == "sync-min") return OpKind::SyncMin;
  if (name == "or-satadd") return OpKind::OrSatAdd;
  if (name == "desync-satadd") return OpKind::DesyncSatAdd;
  if (name == "mult") return OpKind::Mult;
  if (name == "scaled-add") return OpKind::ScaledAdd;
  if (name == "sub") return OpKind::Sub;
  throw std::invalid_argument("unknown op '" + name + "'");
}

std::string op_name(OpKind op) {
  switch (op) {
    case OpKind::OrMax: return "or-max";
    case OpKind::SyncMax: return "sync-max";
    case OpKind::AndMin: return "and-min";
    case OpKind::SyncMin: return "sync-min";
    case OpKind::OrSatAdd: return "or-satadd";
    case OpKind::DesyncSatAdd: return "desync-satadd";
    case OpKind::Mult: return "mult";
    case OpKind::ScaledAdd: return "scaled-add";
    case OpKind::Sub: return "sub";
  }
  return "?";
}

namespace {

OpsRow eval_ops_pair(const OpsSweep& cfg, int xv, int yv, const Bitstream& x,
                     const Bitstream& y, const Bitstream& sel) {
  const double px = static_cast<double>(xv) / cfg.n;
  const double py = static_cast<double>(yv) / cfg.n;
  Bitstream out;
  double exact = 0;
  switch (cfg.op) {
    case OpKind::OrMax:
      out = sat_add(x, y);
      exact = exact_oracle(ExactOp::Max, px, py);
      break;
    case OpKind::SyncMax:
      out = sync_max(x, y, cfg.depth);
      exact = exact_oracle(ExactOp::Max, px, py);
      break;
    case OpKind::AndMin:
      out = mult(x, y);
      exact = exact_oracle(ExactOp::Min, px, py);
      break;
    case OpKind::SyncMin:
      out = sync_min(x, y, cfg.depth);
      exact = exact_oracle(ExactOp::Min, px, py);
      break;
    case OpKind::OrSatAdd:
      out = sat_add(x, y);
      exact = exact_oracle(ExactOp::SatAdd, px, py);
      break;
    case OpKind::DesyncSatAdd:
      out = desync_sat_add(x, y, cfg.depth);
      exact = exact_oracle(ExactOp::SatAdd, px, py);
      break;
    case OpKind::Mult:
      out = mult(x, y);
      exact = exact_oracle(ExactOp::Mult, px, py);
      break;
    case OpKind::ScaledAdd:
      out = scaled_add(x, y, sel);
      exact = exact_oracle(ExactOp::ScaledAdd, px, py);
      break;
    case OpKind::Sub:
      out = sub_correlated(x, y);
      exact = exact_oracle(ExactOp::AbsDiff, px, py);
      break;
  }
  OpsRow row;
  row.x = xv;
  row.y = yv;
  row.measured = value(out, Encoding::Unipolar);
  row.exact = exact;
  row.error = abs_error(row.measured, exact);
  return row;
}

OpsSummary reduce_ops(const std::vector<OpsRow>& rows) {
  OpsSummary s;
  s.pairs = static_cast<std::int64_t>(rows.size());
  for (const OpsRow& r : rows) {
    s.mean_abs_error += r.error;
    s.mean_bias += r.measured - r.exact;
  }
  if (s.pairs > 0) {
    s.mean_abs_error /= static_cast<double>(s.pairs);
    s.mean_bias /= static_cast<double>(s.pairs);
  }
  return s;
}

void validate_ops(const OpsSweep& cfg) {
  if (cfg.n < 4) throw std::invalid_argument("sweep: n must be >= 4");
  if (cfg.depth < 1) throw std::invalid_argument("sweep: depth must be >= 1");
}

}  // namespace

OpsSummary sweep_ops(const OpsSweep& cfg, std::vector<OpsRow>* rows_out) {
  validate_ops(cfg);
  const int count = cfg.n + 1;  // all values 0 .. n
  const auto xs = stream_table(cfg.rng_x, cfg.n, 0, cfg.n);
  const auto ys = stream_table(cfg.rng_y, cfg.n, 0, cfg.n);
  const Bitstream sel = half_density_select(cfg.rng_sel, static_cast<std::size_t>(cfg.n));

  std::vector<OpsRow> rows(static_cast<std::size_t>(count) * count);
  const std::int64_t total = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const int xi = static_cast<int>(idx / count);
    const int yi = static_cast<int>(idx % count);
    rows[static_cast<std::size_t>(idx)] = eval_ops_pair(
        cfg, xi, yi, xs[static_cast<std::size_t>(xi)], ys[static_cast<std::size_t>(yi)], sel);
  }

  OpsSummary summary = reduce_ops(rows);
  if (rows_out != nullptr) *rows_out = std::move(rows);
  return summary;
}

OpsSummary sweep_ops_serial(const OpsSweep& cfg, std::vector<OpsRow>* rows_out) {
  validate_ops(cfg);
  const auto xs = stream_table(cfg.rng_x, cfg.n, 0, cfg.n);
  const auto ys = stream_table(cfg.rng_y, cfg.n, 0, cfg.n);
  const Bitstream sel = half_density_select(cfg.rng_sel, static_cast<std::size_t>(cfg.n));

  std::vector<OpsRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.n + 1) * (cfg.n + 1));
  for (int xv = 0; xv <= cfg.n; ++xv) {
    for (int yv = 0; yv <= cfg.n; ++yv) {
      rows.push_back(eval_ops_pair(cfg, xv, yv, xs[static_cast<std::size_t>(xv)],
                                   ys[static_cast<std::size_t>(yv)], sel));
    }
  }

  OpsSummary summary = reduce_ops(rows);
  if (rows_out != nullptr) *rows_out = std::move(rows);
  return summary;
}

namespace {

// %.6g keeps the files diff-friendly and compact.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class AtomicFile {
 public:
  explicit AtomicFile(const std::string& path) : path_(path), tmp_(path + ".tmp"), out_(tmp_) {
    if (!out_) throw std::runtime_error("cannot open '" + tmp_ + "' for writing");
  }

  ~AtomicFile() {
    if (!committed_) {
      out_.close();
      std::remove(tmp_.c_str());
    }
  }

  std::ofstream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) throw std::runtime_error("write failed for '" + tmp_ + "'");
    out_.close();
    if (std::rename(tmp_.c_str(), path_.c_str()) != 0) {
      throw std::runtime_error("cannot rename '" + tmp_ + "' to '" + path_ + "'");
    }
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

}  // namespace

void write_correlate_csv(const std::string& path, const std::vector<CorrelateRow>& rows,
                         const CorrelateSummary& summary) {
  AtomicFile file(path);
  auto& out = file.stream();
  out << "x,y,input_scc,output_scc,bias_x,bias_y\n";
  for (const CorrelateRow& r : rows) {
    out << r.x << ',' << r.y << ',' << fmt(r.input_scc) << ',' << fmt(r.output_scc) << ','
        << fmt(r.bias_x) << ',' << fmt(r.bias_y) << '\n';
  }
  out << "mean,," << fmt(summary.input_scc) << ',' << fmt(summary.output_scc) << ','
      << fmt(summary.bias_x) << ',' << fmt(summary.bias_y) << '\n';
  file.commit();
}

void write_ops_csv(const std::string& path, const std::vector<OpsRow>& rows,
                   const OpsSummary& summary) {
  AtomicFile file(path);
  auto& out = file.stream();
  out << "x,y,measured,exact,error\n";
  for (const OpsRow& r : rows) {
    out << r.x << ',' << r.y << ',' << fmt(r.measured) << ',' << fmt(r.exact) << ','
        << fmt(r.error) << '\n';
  }
  out << "mean,,," << fmt(summary.mean_bias) << ',' << fmt(summary.mean_abs_error) << '\n';
  file.commit();
}

}  // namespace scsim

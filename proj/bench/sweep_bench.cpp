// Timing comparison of the serial reference kernels against the OpenMP
// versions, with a result-equality check on the side.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scsim/image.hpp"
#include "scsim/pipeline.hpp"
#include "scsim/sweep.hpp"

using namespace scsim;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-24s %10.3fs %12.3fs %8.2fx   %s\n", name.c_str(), serial, parallel,
              serial / parallel, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-24s %11s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    CorrelateSweep cfg;  // synchronizer, vdc x halton-3, n = 256
    std::vector<CorrelateRow> rs;
    std::vector<CorrelateRow> rp;
    CorrelateSummary ss;
    CorrelateSummary sp;
    const double ts = seconds([&] { ss = sweep_correlate_serial(cfg, &rs); });
    const double tp = seconds([&] { sp = sweep_correlate(cfg, &rp); });
    bool equal = rs.size() == rp.size() && ss.used == sp.used;
    for (std::size_t i = 0; equal && i < rs.size(); ++i) {
      equal = rs[i].input_scc == rp[i].input_scc && rs[i].output_scc == rp[i].output_scc &&
              rs[i].bias_x == rp[i].bias_x && rs[i].bias_y == rp[i].bias_y;
    }
    report("sweep-correlate/sync", ts, tp, equal);
  }

  {
    OpsSweep cfg;
    cfg.op = OpKind::SyncMax;
    std::vector<OpsRow> rs;
    std::vector<OpsRow> rp;
    const double ts = seconds([&] { sweep_ops_serial(cfg, &rs); });
    const double tp = seconds([&] { sweep_ops(cfg, &rp); });
    bool equal = rs.size() == rp.size();
    for (std::size_t i = 0; equal && i < rs.size(); ++i) {
      equal = rs[i].measured == rp[i].measured && rs[i].error == rp[i].error;
    }
    report("sweep-ops/sync-max", ts, tp, equal);
  }

  {
    const GrayImage img = make_test_image(64, 64);
    PipelineConfig cfg;
    cfg.variant = Variant::Sync;
    PipelineConfig serial_cfg = cfg;
    serial_cfg.parallel = false;
    PipelineResult a;
    PipelineResult b;
    const double ts = seconds([&] { a = run_pipeline(img, serial_cfg); });
    const double tp = seconds([&] { b = run_pipeline(img, cfg); });
    report("pipeline/sync 64x64", ts, tp, a.image == b.image);
  }

  return 0;
}

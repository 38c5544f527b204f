#include "scsim/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scsim/correlate.hpp"
#include "scsim/gates.hpp"

namespace scsim {

Bitstream sync_max(const Bitstream& x, const Bitstream& y, int depth) {
  const StageConfig stage{StageKind::Synchronizer, depth, 0};
  const StreamPair p = run_pairwise(stage, x, y, /*flush=*/true);
  return sat_add(p.x, p.y);
}

Bitstream sync_min(const Bitstream& x, const Bitstream& y, int depth) {
  const StageConfig stage{StageKind::Synchronizer, depth, 0};
  const StreamPair p = run_pairwise(stage, x, y, /*flush=*/true);
  return mult(p.x, p.y);
}

Bitstream desync_sat_add(const Bitstream& x, const Bitstream& y, int depth) {
  const StageConfig stage{StageKind::Desynchronizer, depth, 0};
  const StreamPair p = run_pairwise(stage, x, y, /*flush=*/true);
  return sat_add(p.x, p.y);
}

double exact_oracle(ExactOp op, double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw std::invalid_argument("exact_oracle: operands must be in [0, 1]");
  }
  switch (op) {
    case ExactOp::Max:
      return std::max(x, y);
    case ExactOp::Min:
      return std::min(x, y);
    case ExactOp::SatAdd:
      return std::min(1.0, x + y);
    case ExactOp::Mult:
      return x * y;
    case ExactOp::ScaledAdd:
      return 0.5 * (x + y);
    case ExactOp::AbsDiff:
      return std::fabs(x - y);
  }
  throw std::invalid_argument("exact_oracle: unknown op");
}

}  // namespace scsim

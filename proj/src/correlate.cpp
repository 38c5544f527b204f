#include "scsim/correlate.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace scsim {

Synchronizer::Synchronizer(int depth, int initial) : depth_(depth), s_(initial) {
  if (depth < 1) throw std::invalid_argument("synchronizer: depth must be >= 1");
  if (std::abs(initial) > depth)
    throw std::invalid_argument("synchronizer: |initial| must be <= depth");
}

BitPair Synchronizer::step(bool x, bool y) {
  if (x == y) return {x, y};
  if (x) {  // (1,0)
    if (s_ < 0) {
      ++s_;
      return {true, true};  // pair with a saved Y one
    }
    if (s_ < depth_) {
      ++s_;
      return {false, false};  // save X's one
    }
    return {true, false};  // saturated
  }
  // (0,1)
  if (s_ > 0) {
    --s_;
    return {true, true};
  }
  if (s_ > -depth_) {
    --s_;
    return {false, false};
  }
  return {false, true};
}

Desynchronizer::Desynchronizer(int depth, int initial) : depth_(depth), k_(initial) {
  if (depth < 1) throw std::invalid_argument("desynchronizer: depth must be >= 1");
  if (initial < 0 || initial > depth)
    throw std::invalid_argument("desynchronizer: initial must be in [0, depth]");
}

BitPair Desynchronizer::step(bool x, bool y) {
  if (x && y) {
    if (k_ < depth_) {
      ++k_;
      return {false, true};  // save X's one, pass Y's
    }
    return {true, true};
  }
  if (!x && !y) {
    if (k_ > 0) {
      --k_;
      return {true, false};  // override one zero with a saved one
    }
    return {false, false};
  }
  return {x, y};  // already unpaired
}

ShuffleBuffer::ShuffleBuffer(int depth, RngStream aux)
    : depth_(depth), aux_(std::move(aux)), mem_(static_cast<std::size_t>(depth), 0) {
  if (depth < 1) throw std::invalid_argument("shuffle buffer: depth must be >= 1");
  if (aux_.range() < static_cast<std::uint32_t>(depth) + 1) {
    throw std::invalid_argument("shuffle buffer: auxiliary rng range must be >= depth + 1");
  }
  for (int i = 0; i < (depth + 1) / 2; ++i) mem_[static_cast<std::size_t>(i)] = 1;
}

bool ShuffleBuffer::step(bool x) {
  const std::uint32_t r = aux_.next();
  if (r >= static_cast<std::uint32_t>(depth_)) return x;
  const bool out = mem_[r] != 0;
  mem_[r] = x ? 1 : 0;
  return out;
}

std::size_t ShuffleBuffer::ones_in_memory() const {
  std::size_t n = 0;
  for (auto b : mem_) n += b;
  return n;
}

namespace {

// Zero counts over suffixes: z[t] = number of positions >= t holding a 0.
std::vector<std::uint32_t> zeros_remaining(const Bitstream& s) {
  std::vector<std::uint32_t> z(s.size() + 1, 0);
  for (std::size_t t = s.size(); t-- > 0;) {
    z[t] = z[t + 1] + (s.bit(t) ? 0u : 1u);
  }
  return z;
}

void run_sync_stage(const Bitstream& x, const Bitstream& y, const StageConfig& st,
                    bool flush, Bitstream& ox, Bitstream& oy) {
  const std::size_t n = x.size();
  Synchronizer fsm(st.depth, st.initial);  // validates depth and offset for both paths
  if (!flush) {
    for (std::size_t t = 0; t < n; ++t) {
      const BitPair o = fsm.step(x.bit(t), y.bit(t));
      ox.set_bit(t, o.x);
      oy.set_bit(t, o.y);
    }
    return;
  }

  // Flushed run. A saved X one can only be re-emitted on a cycle where the
  // input X bit is 0 (and symmetrically for Y), so the invariant kept here
  // is debt <= zeros remaining on the owing stream: saves that would break
  // it fall through to pass-through, and once the debt equals the remaining
  // zeros every such cycle force-emits a saved bit.
  const auto zx = zeros_remaining(x);
  const auto zy = zeros_remaining(y);
  const int depth = st.depth;
  int s = st.initial;
  for (std::size_t t = 0; t < n; ++t) {
    const bool xb = x.bit(t);
    const bool yb = y.bit(t);
    bool exb = xb;
    bool eyb = yb;
    if (xb == yb) {
      if (!xb && s > 0 && static_cast<std::uint32_t>(s) >= zx[t]) {
        exb = true;  // forced: emit a saved X one
        --s;
      } else if (!xb && s < 0 && static_cast<std::uint32_t>(-s) >= zy[t]) {
        eyb = true;
        ++s;
      }
    } else if (xb) {  // (1,0)
      if (s < 0) {
        eyb = true;
        ++s;
      } else if (s < depth && static_cast<std::uint32_t>(s) + 1 <= zx[t]) {
        exb = false;
        ++s;
      }
    } else {  // (0,1)
      if (s > 0) {
        exb = true;
        --s;
      } else if (s > -depth && static_cast<std::uint32_t>(-s) + 1 <= zy[t]) {
        eyb = false;
        --s;
      }
    }
    ox.set_bit(t, exb);
    oy.set_bit(t, eyb);
  }
}

void run_desync_stage(const Bitstream& x, const Bitstream& y, const StageConfig& st,
                      bool flush, Bitstream& ox, Bitstream& oy) {
  const std::size_t n = x.size();
  Desynchronizer fsm(st.depth, st.initial);  // validates depth and offset for both paths
  if (!flush) {
    for (std::size_t t = 0; t < n; ++t) {
      const BitPair o = fsm.step(x.bit(t), y.bit(t));
      ox.set_bit(t, o.x);
      oy.set_bit(t, o.y);
    }
    return;
  }

  // Saved bits are always X's; the solvency bookkeeping only needs X's
  // remaining zeros. Y passes through bit for bit either way.
  const auto zx = zeros_remaining(x);
  const int depth = st.depth;
  int k = st.initial;
  for (std::size_t t = 0; t < n; ++t) {
    const bool xb = x.bit(t);
    const bool yb = y.bit(t);
    bool exb = xb;
    if (xb && yb) {
      if (k < depth && static_cast<std::uint32_t>(k) + 1 <= zx[t]) {
        exb = false;
        ++k;
      }
    } else if (!xb && !yb) {
      if (k > 0) {
        exb = true;
        --k;
      }
    } else if (!xb && yb) {
      if (k > 0 && static_cast<std::uint32_t>(k) >= zx[t]) {
        exb = true;  // forced: re-pair to stay solvent
        --k;
      }
    }
    ox.set_bit(t, exb);
    oy.set_bit(t, yb);
  }
}

}  // namespace

StreamPair run_pairwise(std::span<const StageConfig> stages, const Bitstream& x,
                        const Bitstream& y, bool flush) {
  if (stages.empty()) throw std::invalid_argument("run_pairwise: at least one stage required");
  if (x.size() != y.size()) throw std::invalid_argument("run_pairwise: stream length mismatch");

  StreamPair cur{x, y};
  for (const StageConfig& st : stages) {
    Bitstream ox(x.size());
    Bitstream oy(x.size());
    switch (st.kind) {
      case StageKind::Synchronizer:
        run_sync_stage(cur.x, cur.y, st, flush, ox, oy);
        break;
      case StageKind::Desynchronizer:
        run_desync_stage(cur.x, cur.y, st, flush, ox, oy);
        break;
    }
    cur.x = std::move(ox);
    cur.y = std::move(oy);
  }
  return cur;
}

StreamPair run_pairwise(const StageConfig& stage, const Bitstream& x, const Bitstream& y,
                        bool flush) {
  return run_pairwise(std::span<const StageConfig>(&stage, 1), x, y, flush);
}

namespace {

RngStream make_aux_stream(const RngConfig& cfg, int depth) {
  // Halton binds its range directly to depth+1; power-of-two generators use
  // the smallest width that covers it (draws >= depth simply pass through).
  if (cfg.kind == RngKind::Halton) {
    return RngStream(cfg, static_cast<std::uint32_t>(depth) + 1);
  }
  if (cfg.width > 0) return RngStream(cfg, 1u << cfg.width);
  std::uint32_t range = 2;
  int width = 1;
  while (range < static_cast<std::uint32_t>(depth) + 1) {
    range <<= 1;
    ++width;
  }
  RngConfig sized = cfg;
  sized.width = width;
  return RngStream(sized, range);
}

}  // namespace

StreamPair decorrelate(const Bitstream& x, const Bitstream& y, int depth,
                       const RngConfig& aux_a, const RngConfig& aux_b) {
  if (x.size() != y.size()) throw std::invalid_argument("decorrelate: stream length mismatch");
  if (aux_a == aux_b) {
    throw std::invalid_argument(
        "decorrelate: auxiliary rngs must differ (identical shuffles preserve correlation)");
  }
  ShuffleBuffer ba(depth, make_aux_stream(aux_a, depth));
  ShuffleBuffer bb(depth, make_aux_stream(aux_b, depth));
  StreamPair out{Bitstream(x.size()), Bitstream(y.size())};
  for (std::size_t t = 0; t < x.size(); ++t) {
    out.x.set_bit(t, ba.step(x.bit(t)));
    out.y.set_bit(t, bb.step(y.bit(t)));
  }
  return out;
}

}  // namespace scsim

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "scsim/bitstream.hpp"
#include "scsim/rng.hpp"

namespace scsim {

/// One emitted (x', y') bit pair.
struct BitPair {
  bool x = false;
  bool y = false;
};

/// Bit-serial FSM that raises positive correlation between two streams by
/// pairing up 1s. A single signed counter carries the whole state:
/// s > 0 means s unpaired X ones are saved, s < 0 means |s| Y ones, and
/// |s| never exceeds the save depth.
///
/// Per step: equal inputs pass through; on (1,0) a saved Y one is paired as
/// (1,1) if s < 0, otherwise X's one is saved and (0,0) emitted until the
/// counter saturates at the depth, after which the pair passes unchanged.
/// (0,1) mirrors. Saved bits still held at the end of the stream are lost,
/// so each output value can sink by at most depth/N.
class Synchronizer {
 public:
  explicit Synchronizer(int depth, int initial = 0);

  BitPair step(bool x, bool y);

  int depth() const { return depth_; }
  int saved() const { return s_; }

 private:
  int depth_;
  int s_;
};

/// The dual circuit: unpairs 1s to drive correlation negative. On (1,1) it
/// saves X's one and emits (0,1); on (0,0) it spends a saved one as (1,0);
/// unequal inputs are already unpaired and pass through. Only X is ever
/// rewritten: Y' equals Y bit for bit.
class Desynchronizer {
 public:
  explicit Desynchronizer(int depth, int initial = 0);

  BitPair step(bool x, bool y);

  int depth() const { return depth_; }
  int saved() const { return k_; }

 private:
  int depth_;
  int k_;
};

/// Randomly addressed bit memory of `depth` slots. Each cycle draws r from
/// the auxiliary generator: r >= depth passes the input through, r < depth
/// emits memory[r] and stores the input there. Half the slots start as 1s
/// (slots 0 .. ceil(depth/2)-1) so on average as many ones leave the buffer
/// as enter it. Ones are conserved exactly:
///   ones(out) = ones(in) + ones(initial memory) - ones(final memory).
class ShuffleBuffer {
 public:
  ShuffleBuffer(int depth, RngStream aux);

  bool step(bool x);

  int depth() const { return depth_; }
  std::size_t ones_in_memory() const;

 private:
  int depth_;
  RngStream aux_;
  std::vector<std::uint8_t> mem_;
};

enum class StageKind { Synchronizer, Desynchronizer };

/// One stage of a serial composition. `initial` preloads the FSM counter
/// ("start with a saved bit"), which trades an early surplus against the
/// bits that tend to stay stuck at the end of the stream.
struct StageConfig {
  StageKind kind = StageKind::Synchronizer;
  int depth = 1;
  int initial = 0;
};

struct StreamPair {
  Bitstream x;
  Bitstream y;
};

/// Streams a pair through the staged FSMs (output of stage i feeds stage
/// i+1). With flush = false this is the plain per-step FSM and up to
/// `depth` bits per stream may be lost. With flush = true the run tracks,
/// per stream, how many zero cycles remain: a bit is only saved while it is
/// still guaranteed to be re-emittable, and once the remaining zero cycles
/// are all needed the saved bits are forced out. Flushed stages with zero
/// initial offsets preserve both stream values exactly, for every input.
StreamPair run_pairwise(std::span<const StageConfig> stages, const Bitstream& x,
                        const Bitstream& y, bool flush = false);

StreamPair run_pairwise(const StageConfig& stage, const Bitstream& x,
                        const Bitstream& y, bool flush = false);

/// Two shuffle buffers with distinct auxiliary generators, one per stream.
/// Identical configs are rejected: they would shuffle both streams the same
/// way and leave the correlation intact.
StreamPair decorrelate(const Bitstream& x, const Bitstream& y, int depth,
                       const RngConfig& aux_a, const RngConfig& aux_b);

}  // namespace scsim

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scsim {

enum class RngKind { Lfsr, Vdc, Halton };

/// Immutable description of a deterministic integer generator. The emitted
/// range is bound when an RngStream is created: 2^width for Lfsr/Vdc (width
/// may be left 0 and inferred from the range), arbitrary for Halton.
struct RngConfig {
  RngKind kind = RngKind::Vdc;
  int width = 0;           // Lfsr/Vdc state width in bits; 0 = infer
  int base = 3;            // Halton radix, >= 2
  std::uint32_t seed = 1;  // Lfsr start state, nonzero

  static RngConfig lfsr(int width, std::uint32_t seed = 1);
  static RngConfig vdc(int width = 0);
  static RngConfig halton(int base);

  /// Parses "lfsr:w=8,seed=1" | "vdc:w=8" | "vdc" | "halton:base=3".
  static RngConfig parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const RngConfig&) const = default;
};

/// Reverses the low `width` bits of v.
std::uint32_t bit_reverse(std::uint32_t v, int width);

/// Van der Corput element: bit reversal of (t mod 2^width), in [0, 2^width).
/// A full period t = 0 .. 2^width-1 is a permutation of that range.
std::uint32_t vdc_next(std::uint64_t t, int width);

/// Halton element floor(range * radical_inverse_base(t)), computed in exact
/// integer arithmetic. The first emitted index is t = 1; t = 0 maps to 0.
std::uint32_t halton_next(std::uint64_t t, int base, std::uint32_t range);

/// Maximal-length feedback taps (polynomial exponents, descending, first
/// element = width) for supported widths. Throws for unsupported widths.
const std::vector<int>& lfsr_default_taps(int width);

/// Feedback mask for a right-shifting Fibonacci step: bit (width - e) is set
/// for every tap exponent e.
std::uint32_t lfsr_feedback_mask(int width);
std::uint32_t lfsr_feedback_mask(int width, const std::vector<int>& taps);

/// One Fibonacci step; returns the next state. State 0 is the lockup state
/// and never occurs when starting from a nonzero seed with maximal taps.
std::uint32_t lfsr_next(std::uint32_t state, std::uint32_t mask, int width);

/// Stateful generator emitting one integer in [0, range) per cycle
/// (Lfsr: in [1, range-1], the all-zero state being unreachable).
/// Deterministic: equal configs produce equal sequences. Vdc and Halton
/// iterate from index 1: element 0 of a radical-inverse sequence is 0
/// forever and only degrades the discrepancy, so a Vdc stream equals a
/// Halton stream of base 2.
class RngStream {
 public:
  RngStream(const RngConfig& cfg, std::uint32_t range);

  std::uint32_t next();
  void reset();

  std::uint32_t range() const { return range_; }
  const RngConfig& config() const { return cfg_; }

 private:
  RngConfig cfg_;
  std::uint32_t range_ = 0;
  std::uint32_t mask_ = 0;   // Lfsr feedback
  std::uint32_t state_ = 0;  // Lfsr
  std::uint64_t t_ = 0;      // Vdc/Halton position
};

}  // namespace scsim

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scsim {

/// Value encoding of a stochastic number: ones-fraction in [0,1] or its
/// affine map onto [-1,+1].
enum class Encoding { Unipolar, Bipolar };

/// Fixed-length unary bitstream, the carrier of a stochastic number.
/// Bit index 0 is the first clock cycle. Bits are packed into 64-bit words
/// (LSB first within a word); the logical length is carried separately and
/// never changes after construction.
class Bitstream {
 public:
  Bitstream() = default;

  /// All-zero stream of n cycles.
  explicit Bitstream(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

  /// Parses a '0'/'1' line; character 0 becomes cycle 0.
  static Bitstream from_string(std::string_view s);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool bit(std::size_t t) const { return (words_[t >> 6] >> (t & 63)) & 1u; }

  void set_bit(std::size_t t, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (t & 63);
    if (v) {
      words_[t >> 6] |= m;
    } else {
      words_[t >> 6] &= ~m;
    }
  }

  /// Number of 1 bits (population count over the packed words).
  std::size_t ones() const;

  /// True when every bit is equal, i.e. the stream has zero variance.
  bool constant() const {
    const std::size_t o = ones();
    return o == 0 || o == len_;
  }

  Bitstream complement() const;

  std::string to_string() const;

  friend Bitstream operator&(const Bitstream& a, const Bitstream& b);
  friend Bitstream operator|(const Bitstream& a, const Bitstream& b);
  friend Bitstream operator^(const Bitstream& a, const Bitstream& b);

  bool operator==(const Bitstream&) const = default;

 private:
  // Unused tail bits of the last word are kept zero so that word-level
  // popcounts and comparisons need no masking.
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Decodes the stream value: unipolar ones/N, bipolar (2*ones - N)/N.
double value(const Bitstream& x, Encoding enc);

}  // namespace scsim

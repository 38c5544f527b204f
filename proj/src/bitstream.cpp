#include "scsim/bitstream.hpp"

#include <bit>
#include <stdexcept>

namespace scsim {

namespace {

void check_same_length(const Bitstream& a, const Bitstream& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bitstream length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

Bitstream Bitstream::from_string(std::string_view s) {
  Bitstream out(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] == '1') {
      out.set_bit(t, true);
    } else if (s[t] != '0') {
      throw std::invalid_argument("bitstream literal must contain only '0'/'1'");
    }
  }
  return out;
}

std::size_t Bitstream::ones() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Bitstream Bitstream::complement() const {
  Bitstream out(len_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (len_ & 63) out.words_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
  return out;
}

std::string Bitstream::to_string() const {
  std::string s(len_, '0');
  for (std::size_t t = 0; t < len_; ++t) {
    if (bit(t)) s[t] = '1';
  }
  return s;
}

Bitstream operator&(const Bitstream& a, const Bitstream& b) {
  check_same_length(a, b);
  Bitstream out(a.len_);
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

Bitstream operator|(const Bitstream& a, const Bitstream& b) {
  check_same_length(a, b);
  Bitstream out(a.len_);
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    out.words_[i] = a.words_[i] | b.words_[i];
  return out;
}

Bitstream operator^(const Bitstream& a, const Bitstream& b) {
  check_same_length(a, b);
  Bitstream out(a.len_);
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    out.words_[i] = a.words_[i] ^ b.words_[i];
  return out;
}

double value(const Bitstream& x, Encoding enc) {
  if (x.empty()) throw std::invalid_argument("value() of empty bitstream");
  const double n = static_cast<double>(x.size());
  const double o = static_cast<double>(x.ones());
  return enc == Encoding::Unipolar ? o / n : (2.0 * o - n) / n;
}

}  // namespace scsim

#include "scsim/gates.hpp"

#include <stdexcept>

namespace scsim {

Bitstream mult(const Bitstream& x, const Bitstream& y) { return x & y; }

Bitstream scaled_add(const Bitstream& x, const Bitstream& y, const Bitstream& sel) {
  if (sel.size() != x.size()) {
    throw std::invalid_argument("scaled_add: select length mismatch");
  }
  return (sel & x) | (sel.complement() & y);
}

Bitstream sat_add(const Bitstream& x, const Bitstream& y) { return x | y; }

Bitstream sub_correlated(const Bitstream& x, const Bitstream& y) { return x ^ y; }

Bitstream isolator(const Bitstream& x, bool init) {
  Bitstream out(x.size());
  if (x.empty()) return out;
  out.set_bit(0, init);
  for (std::size_t t = 1; t < x.size(); ++t) out.set_bit(t, x.bit(t - 1));
  return out;
}

}  // namespace scsim

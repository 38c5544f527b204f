#include "scsim/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scsim {

SccCounts scc_counts(const Bitstream& x, const Bitstream& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("scc_counts: incompatible stream lengths");
  }
  SccCounts k;
  k.a = static_cast<std::int64_t>((x & y).ones());
  k.b = static_cast<std::int64_t>(x.ones()) - k.a;
  k.c = static_cast<std::int64_t>(y.ones()) - k.a;
  k.d = static_cast<std::int64_t>(x.size()) - k.a - k.b - k.c;
  return k;
}

double scc(const SccCounts& k) {
  const std::int64_t n = k.n();
  const std::int64_t num = k.a * k.d - k.b * k.c;
  std::int64_t den;
  if (num > 0) {
    den = n * std::min(k.a + k.b, k.a + k.c) - (k.a + k.b) * (k.a + k.c);
  } else {
    den = (k.a + k.b) * (k.a + k.c) - n * std::max<std::int64_t>(k.a - k.d, 0);
  }
  if (den == 0) return 0.0;  // a constant stream: correlation undefined
  return static_cast<double>(num) / static_cast<double>(den);
}

double scc(const Bitstream& x, const Bitstream& y) { return scc(scc_counts(x, y)); }

double bias(const Bitstream& out, const Bitstream& inp, Encoding enc) {
  if (out.size() != inp.size()) {
    throw std::invalid_argument("bias: incompatible stream lengths");
  }
  return value(out, enc) - value(inp, enc);
}

double abs_error(double measured, double exact) { return std::fabs(measured - exact); }

}  // namespace scsim

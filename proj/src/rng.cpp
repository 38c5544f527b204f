#include "scsim/rng.hpp"

#include <bit>
#include <stdexcept>

namespace scsim {

RngConfig RngConfig::lfsr(int width, std::uint32_t seed) {
  RngConfig c;
  c.kind = RngKind::Lfsr;
  c.width = width;
  c.seed = seed;
  return c;
}

RngConfig RngConfig::vdc(int width) {
  RngConfig c;
  c.kind = RngKind::Vdc;
  c.width = width;
  return c;
}

RngConfig RngConfig::halton(int base) {
  RngConfig c;
  c.kind = RngKind::Halton;
  c.base = base;
  return c;
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  if (s.empty()) throw std::invalid_argument("rng spec: empty " + std::string(what));
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("rng spec: bad " + std::string(what) + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

}  // namespace

RngConfig RngConfig::parse(std::string_view text) {
  std::string_view kind = text;
  std::string_view params;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    kind = text.substr(0, colon);
    params = text.substr(colon + 1);
  }

  RngConfig cfg;
  if (kind == "lfsr") {
    cfg.kind = RngKind::Lfsr;
  } else if (kind == "vdc") {
    cfg.kind = RngKind::Vdc;
  } else if (kind == "halton") {
    cfg.kind = RngKind::Halton;
  } else {
    throw std::invalid_argument("rng spec: unknown kind '" + std::string(kind) + "'");
  }

  while (!params.empty()) {
    const auto comma = params.find(',');
    std::string_view item = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("rng spec: expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    if (key == "w") {
      cfg.width = static_cast<int>(parse_u64(val, "width"));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint32_t>(parse_u64(val, "seed"));
    } else if (key == "base") {
      cfg.base = static_cast<int>(parse_u64(val, "base"));
    } else {
      throw std::invalid_argument("rng spec: unknown key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

std::string RngConfig::to_string() const {
  switch (kind) {
    case RngKind::Lfsr:
      return "lfsr:w=" + std::to_string(width) + ",seed=" + std::to_string(seed);
    case RngKind::Vdc:
      return width > 0 ? "vdc:w=" + std::to_string(width) : "vdc";
    case RngKind::Halton:
      return "halton:base=" + std::to_string(base);
  }
  return "?";
}

std::uint32_t bit_reverse(std::uint32_t v, int width) {
  std::uint32_t r = 0;
  for (int i = 0; i < width; ++i) {
    r = (r << 1) | (v & 1u);
    v >>= 1;
  }
  return r;
}

std::uint32_t vdc_next(std::uint64_t t, int width) {
  const std::uint32_t period_mask = (width >= 32) ? ~0u : ((1u << width) - 1u);
  return bit_reverse(static_cast<std::uint32_t>(t) & period_mask, width);
}

std::uint32_t halton_next(std::uint64_t t, int base, std::uint32_t range) {
  // Digit-reversed t as the exact fraction rev/scale; floor(range*rev/scale)
  // stays in integers, so there is no floating-point rounding to worry about.
  std::uint64_t rev = 0;
  std::uint64_t scale = 1;
  const auto b = static_cast<std::uint64_t>(base);
  while (t > 0) {
    rev = rev * b + t % b;
    scale *= b;
    t /= b;
  }
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(range) * rev / scale);
}

const std::vector<int>& lfsr_default_taps(int width) {
  // Standard maximal-length polynomials, one per width. Periods are checked
  // exhaustively in the test suite.
  static const std::vector<std::vector<int>> table = {
      /* 2*/ {2, 1},        /* 3*/ {3, 2},         /* 4*/ {4, 3},
      /* 5*/ {5, 3},        /* 6*/ {6, 5},         /* 7*/ {7, 6},
      /* 8*/ {8, 6, 5, 4},  /* 9*/ {9, 5},         /*10*/ {10, 7},
      /*11*/ {11, 9},       /*12*/ {12, 6, 4, 1},  /*13*/ {13, 4, 3, 1},
      /*14*/ {14, 5, 3, 1}, /*15*/ {15, 14},       /*16*/ {16, 15, 13, 4},
      /*17*/ {17, 14},      /*18*/ {18, 11},       /*19*/ {19, 6, 2, 1},
      /*20*/ {20, 17},      /*21*/ {21, 19},       /*22*/ {22, 21},
      /*23*/ {23, 18},      /*24*/ {24, 23, 22, 17},
  };
  if (width < 2 || width > 24) {
    throw std::invalid_argument("lfsr: no default taps for width " + std::to_string(width));
  }
  return table[static_cast<std::size_t>(width - 2)];
}

std::uint32_t lfsr_feedback_mask(int width, const std::vector<int>& taps) {
  std::uint32_t mask = 0;
  for (int e : taps) {
    if (e < 1 || e > width) throw std::invalid_argument("lfsr: tap exponent out of range");
    mask |= 1u << (width - e);
  }
  return mask;
}

std::uint32_t lfsr_feedback_mask(int width) {
  return lfsr_feedback_mask(width, lfsr_default_taps(width));
}

std::uint32_t lfsr_next(std::uint32_t state, std::uint32_t mask, int width) {
  const std::uint32_t fb = static_cast<std::uint32_t>(std::popcount(state & mask)) & 1u;
  return (state >> 1) | (fb << (width - 1));
}

RngStream::RngStream(const RngConfig& cfg, std::uint32_t range) : cfg_(cfg), range_(range) {
  if (range < 2) throw std::invalid_argument("rng: range must be >= 2");
  switch (cfg_.kind) {
    case RngKind::Lfsr:
    case RngKind::Vdc: {
      if (cfg_.width == 0) {
        if (!std::has_single_bit(range))
          throw std::invalid_argument("rng: range " + std::to_string(range) +
                                      " is not a power of two; set an explicit width");
        cfg_.width = std::countr_zero(range);
      }
      if (cfg_.width < 1 || cfg_.width > 31 || (std::uint64_t{1} << cfg_.width) != range) {
        throw std::invalid_argument("rng: width " + std::to_string(cfg_.width) +
                                    " does not match range " + std::to_string(range));
      }
      if (cfg_.kind == RngKind::Lfsr) {
        if (cfg_.seed == 0 || cfg_.seed >= range)
          throw std::invalid_argument("rng: lfsr seed must be in [1, 2^w - 1]");
        mask_ = lfsr_feedback_mask(cfg_.width);
        state_ = cfg_.seed;
      }
      break;
    }
    case RngKind::Halton:
      if (cfg_.base < 2) throw std::invalid_argument("rng: halton base must be >= 2");
      break;
  }
}

std::uint32_t RngStream::next() {
  switch (cfg_.kind) {
    case RngKind::Lfsr: {
      const std::uint32_t r = state_;
      state_ = lfsr_next(state_, mask_, cfg_.width);
      return r;
    }
    case RngKind::Vdc:
      return vdc_next(++t_, cfg_.width);
    case RngKind::Halton:
      return halton_next(++t_, cfg_.base, range_);
  }
  return 0;  // unreachable
}

void RngStream::reset() {
  t_ = 0;
  state_ = cfg_.seed;
}

}  // namespace scsim

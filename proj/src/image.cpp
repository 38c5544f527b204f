#include "scsim/image.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace scsim {

std::uint8_t GrayImage::clamped(int r, int c) const {
  r = std::clamp(r, 0, height - 1);
  c = std::clamp(c, 0, width - 1);
  return at(r, c);
}

namespace {

// Skips whitespace and '#' comment lines between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else if (ch != EOF && std::isspace(ch)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const std::string& path) {
  skip_separators(in);
  int v = 0;
  if (!(in >> v)) throw std::runtime_error(path + ": malformed PGM header");
  return v;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");

  std::string magic;
  in >> magic;
  if (magic != "P2" && magic != "P5") {
    throw std::runtime_error(path + ": not a P2/P5 PGM file");
  }
  const int w = read_header_int(in, path);
  const int h = read_header_int(in, path);
  const int maxval = read_header_int(in, path);
  if (w <= 0 || h <= 0) throw std::runtime_error(path + ": bad dimensions");
  if (maxval != 255) {
    throw std::runtime_error(path + ": unsupported maxval " + std::to_string(maxval));
  }

  GrayImage img(w, h);
  if (magic == "P5") {
    if (in.get() == '\r' && in.peek() == '\n') in.get();  // separator after maxval
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
      throw std::runtime_error(path + ": truncated raster");
    }
  } else {
    for (auto& px : img.pixels) {
      skip_separators(in);  // comments may appear inside the raster too
      int v = 0;
      if (!(in >> v) || v < 0 || v > 255) {
        throw std::runtime_error(path + ": bad P2 sample");
      }
      px = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
  if (img.width <= 0 || img.height <= 0) {
    throw std::invalid_argument("write_pgm: empty image");
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error(path + ": write failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error(path + ": rename failed");
  }
}

namespace {

std::uint32_t pixel_hash(std::uint32_t r, std::uint32_t c) {
  std::uint32_t h = r * 2654435761u ^ (c * 40503u + 0x9e3779b9u);
  h ^= h >> 13;
  h *= 0x85ebca6bu;
  h ^= h >> 16;
  return h;
}

}  // namespace

GrayImage make_test_image(int width, int height) {
  if (width < 4 || height < 4) throw std::invalid_argument("make_test_image: too small");
  GrayImage img(width, height);
  const double cx = 0.38 * width;
  const double cy = 0.42 * height;
  const double radius = 0.26 * std::min(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      double v = 70.0 + 115.0 * c / (width - 1);
      const double dx = c - cx;
      const double dy = r - cy;
      if (dx * dx + dy * dy <= radius * radius) v = 205.0;
      if (r >= static_cast<int>(0.64 * height) && r < static_cast<int>(0.88 * height) &&
          c >= static_cast<int>(0.52 * width) && c < static_cast<int>(0.90 * width)) {
        v = 52.0;
      }
      // Three texture octaves; the coarser ones survive a 3x3 blur.
      const auto ur = static_cast<std::uint32_t>(r);
      const auto uc = static_cast<std::uint32_t>(c);
      const int texture = (static_cast<int>(pixel_hash(ur, uc) % 61u) - 30) +
                          (static_cast<int>(pixel_hash(ur >> 1, uc >> 1) % 71u) - 35) +
                          (static_cast<int>(pixel_hash(ur >> 2, (uc >> 2) + 7u) % 81u) - 40);
      const int px = std::clamp(static_cast<int>(v) + texture, 0, 255);
      img.at(r, c) = static_cast<std::uint8_t>(px);
    }
  }
  return img;
}

}  // namespace scsim

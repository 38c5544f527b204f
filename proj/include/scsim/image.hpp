#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scsim {

/// Row-major 8-bit grayscale image.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

  std::uint8_t at(int r, int c) const {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(c)];
  }
  std::uint8_t& at(int r, int c) {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(c)];
  }

  /// Pixel read with clamp-to-edge semantics for out-of-range coordinates.
  std::uint8_t clamped(int r, int c) const;

  bool operator==(const GrayImage&) const = default;
};

/// Reads a P2 (ASCII) or P5 (binary) PGM with maxval 255.
GrayImage read_pgm(const std::string& path);

/// Writes P5 with maxval 255; read_pgm(write_pgm(img)) reproduces img
/// bit for bit. The file appears atomically (temp + rename).
void write_pgm(const GrayImage& img, const std::string& path);

/// Deterministic grayscale test pattern: an intensity ramp with a bright
/// disc and a dark box on top, plus hash-based fine texture so that every
/// neighborhood carries gradient content.
GrayImage make_test_image(int width, int height);

}  // namespace scsim

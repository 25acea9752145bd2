#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edgebench {

// Out-of-range reads during convolution.
enum class BorderPolicy { Replicate, Reflect, Zero };

/// Single-band raster with row-major double pixels. Images coming from a
/// loader or normalize_minmax hold values in [0,1]; intermediate filter
/// outputs may hold any real value (negatives included).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0);

  double& at(int r, int c) { return pixels[static_cast<size_t>(r) * width + c]; }
  double at(int r, int c) const { return pixels[static_cast<size_t>(r) * width + c]; }
  long pixel_count() const { return static_cast<long>(width) * height; }
};

/// Binary raster of detected edge pixels.
struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 1 = edge

  EdgeMap() = default;
  EdgeMap(int w, int h);

  bool at(int r, int c) const { return bits[static_cast<size_t>(r) * width + c] != 0; }
  void set(int r, int c, bool v) { bits[static_cast<size_t>(r) * width + c] = v ? 1 : 0; }
  long count() const;
};

/// Ordered, co-registered bands of one scene plus their labels.
struct BandStack {
  std::vector<GrayImage> bands;
  std::vector<std::string> labels;
};

/// (p - min) / (max - min); a constant image maps to all zeros.
GrayImage normalize_minmax(const GrayImage& img);

/// EdgeMap as a 0/1-valued image (handy for PGM output, where 1 -> 255).
GrayImage to_image(const EdgeMap& em);

}  // namespace edgebench

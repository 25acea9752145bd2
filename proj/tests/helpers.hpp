#pragma once

// Shared test utilities: the brute-force convolution oracle, random image and
// scene generators, and small raster manipulations. Everything here is kept
// independent of the library's convolution path so it can serve as an oracle.

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "edgebench/error.hpp"
#include "edgebench/image.hpp"
#include "edgebench/kernel.hpp"
#include "edgebench/synth.hpp"

namespace testutil {

using edgebench::BorderPolicy;
using edgebench::EdgeMap;
using edgebench::GrayImage;
using edgebench::Kernel;
using edgebench::SceneSpec;

// Out-of-range read resolved directly from the definitions, written without
// reusing the library's index folding.
inline double sample_with_border(const GrayImage& img, int r, int c, BorderPolicy border) {
  const int h = img.height, w = img.width;
  if (border == BorderPolicy::Zero) {
    if (r < 0 || r >= h || c < 0 || c >= w) return 0.0;
    return img.at(r, c);
  }
  if (border == BorderPolicy::Replicate) {
    if (r < 0) r = 0;
    if (r >= h) r = h - 1;
    if (c < 0) c = 0;
    if (c >= w) c = w - 1;
    return img.at(r, c);
  }
  // Reflect (edge-inclusive): ... img[1], img[0] | img[0], img[1], ...
  auto reflect = [](int i, int n) {
    while (true) {
      if (i < 0)
        i = -1 - i;
      else if (i >= n)
        i = n - (i - n) - 1;
      else
        return i;
    }
  };
  return img.at(reflect(r, h), reflect(c, w));
}

// Quadruple-loop correlation oracle.
inline GrayImage convolve_oracle(const GrayImage& img, const Kernel& k, BorderPolicy border) {
  GrayImage out(img.width, img.height);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      double acc = 0.0;
      for (int i = 0; i < k.height; ++i)
        for (int j = 0; j < k.width; ++j)
          acc += k.at(i, j) *
                 sample_with_border(img, r + i - k.anchor_row, c + j - k.anchor_col, border);
      out.at(r, c) = acc;
    }
  return out;
}

inline GrayImage random_image(std::mt19937& rng, int w, int h) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  GrayImage img(w, h);
  for (auto& p : img.pixels) p = dist(rng);
  return img;
}

inline Kernel random_kernel(std::mt19937& rng, int max_side) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::uniform_real_distribution<double> tap(-1.0, 1.0);
  const int w = side(rng), h = side(rng);
  std::vector<double> taps(static_cast<size_t>(w) * h);
  for (auto& t : taps) t = tap(rng);
  std::uniform_int_distribution<int> ar(0, h - 1), ac(0, w - 1);
  return Kernel(w, h, std::move(taps), ar(rng), ac(rng));
}

// Random two-level scene, feature geometry kept comfortably inside the frame.
inline SceneSpec random_scene_spec(std::mt19937& rng, int min_side = 24, int max_side = 64) {
  std::uniform_int_distribution<int> side(min_side, max_side);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> level(0.0, 0.35);
  const int w = side(rng), h = side(rng);
  const double lo = level(rng);
  const double hi = 1.0 - level(rng);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> split(w / 4, 3 * w / 4);
      return SceneSpec::vstep(w, h, split(rng), lo, hi);
    }
    case 1: {
      std::uniform_int_distribution<int> thick(2, 5);
      const int t = thick(rng);
      std::uniform_int_distribution<int> start(2, h - t - 2);
      return SceneSpec::ribbon(w, h, t, false, start(rng), lo, hi);
    }
    case 2: {
      const int r = std::min(w, h) / 4;
      return SceneSpec::disk(w, h, w / 2, h / 2, r, lo, hi);
    }
    default: {
      std::uniform_int_distribution<int> block(4, std::min(w, h) / 3);
      return SceneSpec::checker(w, h, block(rng), lo, hi);
    }
  }
}

inline GrayImage rot90cw(const GrayImage& img) {
  GrayImage out(img.height, img.width);
  for (int r = 0; r < out.height; ++r)
    for (int c = 0; c < out.width; ++c)
      out.at(r, c) = img.at(img.height - 1 - c, r);
  return out;
}

inline GrayImage rot90ccw(const GrayImage& img) {
  GrayImage out(img.height, img.width);
  for (int r = 0; r < out.height; ++r)
    for (int c = 0; c < out.width; ++c)
      out.at(r, c) = img.at(c, img.width - 1 - r);
  return out;
}

inline double max_abs_diff(const GrayImage& a, const GrayImage& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.pixels.size(); ++i)
    worst = std::max(worst, std::abs(a.pixels[i] - b.pixels[i]));
  return worst;
}

// Scratch directory removed when the test scope ends.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("edgebench_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
  std::filesystem::path path_;
};

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// True when fn throws an edgebench::Error carrying the expected code.
inline bool throws_code(edgebench::Errc expected, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const edgebench::Error& e) {
    return e.code() == expected;
  }
  return false;
}

// Independent hysteresis connectivity check: flood-fill the edge map from the
// pixels whose suppressed value exceeds `high` and verify every edge pixel is
// reached through 8-connected edge pixels.
inline bool all_edges_reach_strong(const EdgeMap& em, const GrayImage& suppressed,
                                   double high) {
  const int w = em.width, h = em.height;
  std::vector<char> reached(static_cast<size_t>(w) * h, 0);
  std::vector<long> stack;
  for (long i = 0; i < static_cast<long>(em.bits.size()); ++i) {
    if (em.bits[i] && suppressed.pixels[i] > high) {
      reached[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const long p = stack.back();
    stack.pop_back();
    const int r = static_cast<int>(p / w), c = static_cast<int>(p % w);
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        const int rr = r + dr, cc = c + dc;
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
        const long q = static_cast<long>(rr) * w + cc;
        if (em.bits[q] && !reached[q]) {
          reached[q] = 1;
          stack.push_back(q);
        }
      }
  }
  for (size_t i = 0; i < em.bits.size(); ++i)
    if (em.bits[i] && !reached[i]) return false;
  return true;
}

}  // namespace testutil

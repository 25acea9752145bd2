#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgebench/bands.hpp"
#include "edgebench/detector.hpp"
#include "edgebench/image.hpp"

namespace edgebench {

/// SplitMix64: the pseudorandom generator behind every stochastic helper in
/// this library, chosen so corrupted images are bit-reproducible across runs
/// and reimplementations. state advances by 0x9E3779B97F4A7C15 per draw; the
/// output mixing is the standard 30/27/31 xor-shift-multiply chain.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Salt-and-pepper corruption: visiting pixels in row-major order, each draws
/// two SplitMix64 values: the first decides corruption (u < density), the
/// second picks salt (bit 0 set -> 1.0) or pepper (0.0). Fixed seeds give
/// bit-identical output for any density.
GrayImage salt_pepper(const GrayImage& img, double density, std::uint64_t seed);

/// Additive zero-mean Gaussian noise (Box-Muller over SplitMix64), clamped to
/// [0,1]. Deterministic per seed.
GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

/// Fraction of detected pixels with no truth pixel within Chebyshev distance
/// tol; 0 when nothing was detected.
double false_edge_rate(const EdgeMap& em, const TruthMask& truth, int tol);

struct NoiseRow {
  Method method;
  double density = 0.0;
  std::uint64_t seed = 0;
  double false_edge_rate = 0.0;
  double true_edge_recall = 0.0;
};

struct NoiseReport {
  std::vector<NoiseRow> rows;  // one per (method, density, seed)
};

/// Corrupt the scene per (density, seed) cell, run every detector config,
/// and score false edges and recall against the truth mask.
NoiseReport noise_study(std::span<const DetectorConfig> methods, const GrayImage& scene,
                        const TruthMask& truth, std::span<const double> densities,
                        std::span<const std::uint64_t> seeds,
                        int tol = kDefaultMatchTolerance);

}  // namespace edgebench

#include "edgebench/noise.hpp"

#include <algorithm>
#include <cmath>

#include "edgebench/error.hpp"

namespace edgebench {

GrayImage salt_pepper(const GrayImage& img, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(Errc::DensityOutOfRange, "noise density must lie in [0,1]");
  GrayImage out = img;
  SplitMix64 rng(seed);
  for (auto& p : out.pixels) {
    const double u = rng.next_unit();
    const bool salt = (rng.next() & 1ULL) != 0;
    if (u < density) p = salt ? 1.0 : 0.0;
  }
  return out;
}

GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0))
    throw Error(Errc::InvalidArgument, "noise sigma must be non-negative");
  GrayImage out = img;
  SplitMix64 rng(seed);
  for (auto& p : out.pixels) {
    const double u1 = 1.0 - rng.next_unit();  // (0, 1]
    const double u2 = rng.next_unit();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    p = std::clamp(p + sigma * z, 0.0, 1.0);
  }
  return out;
}

double false_edge_rate(const EdgeMap& em, const TruthMask& truth, int tol) {
  if (em.width != truth.mask.width || em.height != truth.mask.height)
    throw Error(Errc::DimensionMismatch, "edge map and truth mask differ in size");
  if (tol < 0) throw Error(Errc::InvalidArgument, "matching tolerance must be >= 0");

  long detected = 0, unmatched = 0;
  for (int r = 0; r < em.height; ++r) {
    for (int c = 0; c < em.width; ++c) {
      if (!em.at(r, c)) continue;
      ++detected;
      bool hit = false;
      const int r0 = std::max(0, r - tol), r1 = std::min(em.height - 1, r + tol);
      const int c0 = std::max(0, c - tol), c1 = std::min(em.width - 1, c + tol);
      for (int rr = r0; rr <= r1 && !hit; ++rr)
        for (int cc = c0; cc <= c1; ++cc)
          if (truth.mask.at(rr, cc)) {
            hit = true;
            break;
          }
      if (!hit) ++unmatched;
    }
  }
  return detected > 0 ? static_cast<double>(unmatched) / detected : 0.0;
}

NoiseReport noise_study(std::span<const DetectorConfig> methods, const GrayImage& scene,
                        const TruthMask& truth, std::span<const double> densities,
                        std::span<const std::uint64_t> seeds, int tol) {
  if (scene.width != truth.mask.width || scene.height != truth.mask.height)
    throw Error(Errc::DimensionMismatch, "scene and truth mask differ in size");
  NoiseReport report;
  report.rows.reserve(methods.size() * densities.size() * seeds.size());
  for (const auto& cfg : methods) {
    resolve(cfg);  // fail fast on invalid configs
    for (double density : densities) {
      for (std::uint64_t seed : seeds) {
        const GrayImage corrupted = salt_pepper(scene, density, seed);
        const EdgeMap em = detect(corrupted, cfg);
        NoiseRow row;
        row.method = cfg.method;
        row.density = density;
        row.seed = seed;
        row.false_edge_rate = false_edge_rate(em, truth, tol);
        row.true_edge_recall = score_against_truth(em, truth, tol).recall;
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

}  // namespace edgebench

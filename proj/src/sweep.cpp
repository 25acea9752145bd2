#include "edgebench/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"

namespace edgebench {

std::vector<double> uniform_grid(int n) {
  if (n < 1) throw Error(Errc::EmptyGrid, "grid needs at least one point");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = 0.0;
    return g;
  }
  for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  g.back() = 1.0;
  return g;
}

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw Error(Errc::EmptyGrid, "threshold grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw Error(Errc::ThresholdOutOfRange, "grid thresholds must lie in [0,1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw Error(Errc::UnsortedGrid, "threshold grid must be strictly ascending");
  }
}

double density_of(const EdgeMap& em) {
  return static_cast<double>(em.count()) /
         (static_cast<double>(em.width) * static_cast<double>(em.height));
}

// sigma for the smoothing stage; the grid overrides any thresholds in cfg,
// so those are deliberately not validated here.
double sweep_sigma(const DetectorConfig& cfg) {
  const double s = cfg.sigma.value_or(cfg.method == Method::Canny ? kCannyDefaultSigma
                                                                  : kLogDefaultSigma);
  if (!(s > 0.0)) throw Error(Errc::NonPositiveSigma, "sweep requires sigma > 0");
  return s;
}

}  // namespace

SweepResult sweep(const GrayImage& img, const DetectorConfig& cfg,
                  std::span<const double> grid) {
  check_grid(grid);

  SweepResult sr;
  sr.thresholds.assign(grid.begin(), grid.end());
  sr.densities.reserve(grid.size());

  switch (cfg.method) {
    case Method::Sobel:
    case Method::Prewitt:
    case Method::Roberts: {
      const GradientOp op = cfg.method == Method::Sobel     ? GradientOp::Sobel
                            : cfg.method == Method::Prewitt ? GradientOp::Prewitt
                                                            : GradientOp::Roberts;
      const GradientField gf = gradient(img, op);
      for (double t : grid) sr.densities.push_back(density_of(threshold_edges(gf, t)));
      break;
    }
    case Method::Canny: {
      const GrayImage smoothed =
          convolve(img, gaussian_kernel(sweep_sigma(cfg)), BorderPolicy::Replicate);
      const GrayImage suppressed = non_max_suppression(gradient(smoothed, GradientOp::Sobel));
      for (double t : grid) {
        const double low = kCannyLowRatio * t;
        sr.densities.push_back(density_of(detail::hysteresis_unchecked(suppressed, low, t)));
      }
      break;
    }
    case Method::Log:
    case Method::ZeroCross: {
      const Kernel k = cfg.method == Method::ZeroCross && cfg.zero_cross_kernel
                           ? *cfg.zero_cross_kernel
                           : log_kernel(sweep_sigma(cfg));
      const GrayImage filtered = convolve(img, k, BorderPolicy::Replicate);
      for (double t : grid) sr.densities.push_back(density_of(zero_crossings(filtered, t)));
      break;
    }
  }
  return sr;
}

SweepResult extract_range(SweepResult sr, double elimination_eps, double plateau_frac,
                          std::span<const double> ideal_samples) {
  if (sr.densities.empty() || sr.densities.size() != sr.thresholds.size())
    throw Error(Errc::UnfilledDensities, "sweep densities are not filled");
  if (!(elimination_eps >= 0.0))
    throw Error(Errc::InvalidArgument, "elimination_eps must be non-negative");
  if (!(plateau_frac > 0.0 && plateau_frac <= 1.0))
    throw Error(Errc::InvalidArgument, "plateau_frac must lie in (0,1]");

  const auto& g = sr.thresholds;
  const auto& d = sr.densities;

  const bool all_zero = std::all_of(d.begin(), d.end(), [](double v) { return v == 0.0; });
  if (all_zero) {
    sr.t_min = sr.t_ideal = sr.t_max = g.front();
    sr.triple_set = true;
    return sr;
  }

  double t_max = g.back();
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= elimination_eps) {
      t_max = g[i];
      break;
    }
  }

  const double floor = plateau_frac * d.front();
  double t_min = g.front();
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] >= floor) t_min = g[i];

  if (t_min > t_max) t_min = t_max;

  double t_ideal;
  if (!ideal_samples.empty())
    t_ideal = otsu_threshold(ideal_samples);
  else
    t_ideal = std::sqrt(t_min * t_max);
  t_ideal = std::clamp(t_ideal, t_min, t_max);

  sr.t_min = t_min;
  sr.t_ideal = t_ideal;
  sr.t_max = t_max;
  sr.triple_set = true;
  return sr;
}

double otsu_threshold(std::span<const double> values) {
  if (values.size() < 2)
    throw Error(Errc::DegenerateInput, "otsu needs at least two samples");
  const double first = values.front();
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v == first; }))
    throw Error(Errc::DegenerateInput, "otsu needs at least two distinct samples");

  constexpr int kBins = 256;
  std::array<long, kBins> hist{};
  for (double v : values) {
    int bin = static_cast<int>(v * kBins);
    bin = std::clamp(bin, 0, kBins - 1);
    ++hist[bin];
  }

  const double total = static_cast<double>(values.size());
  double total_mean = 0.0;
  for (int b = 0; b < kBins; ++b) total_mean += b * static_cast<double>(hist[b]);
  total_mean /= total;

  // Between-class variance for a cut after bin k; exact ties are averaged so
  // that wide empty gaps between classes resolve to their middle.
  double best = -1.0;
  double tie_sum = 0.0;
  long tie_count = 0;
  double w0 = 0.0, sum0 = 0.0;
  for (int k = 0; k < kBins - 1; ++k) {
    w0 += static_cast<double>(hist[k]);
    sum0 += k * static_cast<double>(hist[k]);
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double mu0 = sum0 / w0;
    const double mu1 = (total_mean * total - sum0) / w1;
    const double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (var > best) {
      best = var;
      tie_sum = k;
      tie_count = 1;
    } else if (var == best) {
      tie_sum += k;
      ++tie_count;
    }
  }
  const double k_star = tie_sum / static_cast<double>(tie_count);
  return (k_star + 0.5) / kBins;
}

SweepResult sweep_and_extract(const GrayImage& img, const DetectorConfig& cfg,
                              std::span<const double> grid, double elimination_eps,
                              double plateau_frac) {
  SweepResult sr = sweep(img, cfg, grid);

  std::vector<double> samples;
  switch (cfg.method) {
    case Method::Sobel:
      samples = gradient(img, GradientOp::Sobel).magnitude.pixels;
      break;
    case Method::Prewitt:
      samples = gradient(img, GradientOp::Prewitt).magnitude.pixels;
      break;
    case Method::Roberts:
      samples = gradient(img, GradientOp::Roberts).magnitude.pixels;
      break;
    case Method::Canny: {
      const GrayImage smoothed =
          convolve(img, gaussian_kernel(sweep_sigma(cfg)), BorderPolicy::Replicate);
      samples = gradient(smoothed, GradientOp::Sobel).magnitude.pixels;
      break;
    }
    case Method::Log:
    case Method::ZeroCross:
      break;  // geometric-mean rule
  }
  return extract_range(std::move(sr), elimination_eps, plateau_frac, samples);
}

}  // namespace edgebench

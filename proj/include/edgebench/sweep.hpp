#pragma once

#include <span>
#include <vector>

#include "edgebench/detector.hpp"
#include "edgebench/image.hpp"

namespace edgebench {

/// Edge-density curve over a threshold grid, plus the extracted operating
/// range once extract_range has run.
struct SweepResult {
  std::vector<double> thresholds;  // strictly ascending, in [0,1]
  std::vector<double> densities;   // edge-pixel fraction per threshold
  bool triple_set = false;
  double t_min = 0.0;
  double t_ideal = 0.0;
  double t_max = 0.0;
};

/// Defaults for the range extraction; both are CLI flags.
constexpr double kDefaultEliminationEps = 1e-4;
constexpr double kDefaultPlateauFrac = 0.95;
constexpr int kDefaultGridPoints = 101;

/// Uniform grid of n points spanning [0,1].
std::vector<double> uniform_grid(int n);

/// Run the detector across the grid and record the edge density at each
/// threshold. For Canny, the grid drives `high` with low = 0.4*high (grid
/// point 0 degenerates to "every suppressed pixel above zero"). The
/// per-method pipeline prefix is computed once and reused across the grid;
/// results are identical to calling detect() per point.
SweepResult sweep(const GrayImage& img, const DetectorConfig& cfg,
                  std::span<const double> grid);

/// Fill (t_min, t_ideal, t_max): t_max is the first grid threshold whose
/// density drops to elimination_eps or below (grid max if none); t_min the
/// last threshold whose density still reaches plateau_frac of the initial
/// density; t_ideal is Otsu over ideal_samples when provided (gradient
/// magnitudes), else the geometric mean of t_min and t_max. The triple is
/// clamped into ascending order.
SweepResult extract_range(SweepResult sr, double elimination_eps, double plateau_frac,
                          std::span<const double> ideal_samples = {});

/// 256-bin Otsu threshold of samples in [0,1]: the bin midpoint maximizing
/// between-class variance, averaging the index over exact ties.
double otsu_threshold(std::span<const double> values);

/// sweep + extract_range with the method-appropriate ideal samples: the
/// gradient magnitude raster for Sobel/Prewitt/Roberts, the smoothed Sobel
/// magnitude for Canny, none for Log/ZeroCross.
SweepResult sweep_and_extract(const GrayImage& img, const DetectorConfig& cfg,
                              std::span<const double> grid,
                              double elimination_eps = kDefaultEliminationEps,
                              double plateau_frac = kDefaultPlateauFrac);

}  // namespace edgebench

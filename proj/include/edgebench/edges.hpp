#pragma once

#include "edgebench/gradient.hpp"
#include "edgebench/image.hpp"

namespace edgebench {

/// Mark every pixel whose normalized magnitude strictly exceeds t. No
/// thinning is applied.
EdgeMap threshold_edges(const GradientField& gf, double t);

/// Thin the magnitude raster along the gradient direction, quantized to four
/// sectors. A pixel survives when its magnitude is >= both neighbors along
/// the quantized direction (ties kept); border pixels compare only against
/// in-bounds neighbors.
GrayImage non_max_suppression(const GradientField& gf);

/// Dual-threshold linking: pixels above `high` seed a flood fill that keeps
/// every 8-connected pixel above `low`. Requires 0 <= low < high <= 1.
EdgeMap hysteresis(const GrayImage& suppressed, double low, double high);

/// Gaussian smooth -> Sobel gradient -> non-maximum suppression ->
/// hysteresis.
EdgeMap canny(const GrayImage& img, double low, double high, double sigma);

/// Mark sign changes between 4-adjacent pixels whose value jump exceeds t.
/// The crossing is attributed to the smaller-magnitude side; on equal
/// magnitudes the earlier pixel in row-major order wins.
EdgeMap zero_crossings(const GrayImage& filtered, double t);

namespace detail {
// hysteresis core without the low < high check; low == high degenerates to
// "every pixel above high" (used by the sweep harness at grid point 0).
EdgeMap hysteresis_unchecked(const GrayImage& suppressed, double low, double high);
}  // namespace detail

}  // namespace edgebench

#pragma once

#include <vector>

namespace edgebench {

/// Convolution mask. Taps are applied in correlation orientation:
/// out(r,c) = sum taps(i,j) * img(r + i - anchor_row, c + j - anchor_col).
struct Kernel {
  int width = 0;
  int height = 0;
  std::vector<double> taps;  // row-major
  int anchor_row = 0;
  int anchor_col = 0;

  Kernel() = default;
  Kernel(int w, int h, std::vector<double> t, int ar, int ac);

  double at(int i, int j) const { return taps[static_cast<size_t>(i) * width + j]; }
};

/// Square odd Gaussian of half-width ceil(3*sigma), taps normalized to sum
/// exactly 1.
Kernel gaussian_kernel(double sigma);

/// Laplacian-of-Gaussian of half-width ceil(4*sigma). The Gaussian factor is
/// normalized to unit sum before the (x^2+y^2-2s^2)/s^4 weighting, then the
/// taps are mean-subtracted so they sum to exactly 0. The wider support keeps
/// the side lobes; the center tap is the most negative one.
Kernel log_kernel(double sigma);

}  // namespace edgebench

#include "edgebench/kernel.hpp"

#include <cmath>

#include "edgebench/error.hpp"

namespace edgebench {

Kernel::Kernel(int w, int h, std::vector<double> t, int ar, int ac)
    : width(w), height(h), taps(std::move(t)), anchor_row(ar), anchor_col(ac) {
  if (w < 1 || h < 1 || taps.size() != static_cast<size_t>(w) * h)
    throw Error(Errc::InvalidArgument, "kernel taps do not match dimensions");
  if (ar < 0 || ar >= h || ac < 0 || ac >= w)
    throw Error(Errc::InvalidArgument, "kernel anchor out of bounds");
}

Kernel gaussian_kernel(double sigma) {
  if (!(sigma > 0.0))
    throw Error(Errc::NonPositiveSigma, "gaussian_kernel requires sigma > 0");
  const int half = static_cast<int>(std::ceil(3.0 * sigma));
  const int size = 2 * half + 1;
  std::vector<double> taps(static_cast<size_t>(size) * size);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double y = i - half;
    for (int j = 0; j < size; ++j) {
      const double x = j - half;
      const double v = std::exp(-(x * x + y * y) * inv2s2);
      taps[static_cast<size_t>(i) * size + j] = v;
      sum += v;
    }
  }
  for (auto& t : taps) t /= sum;
  return Kernel(size, size, std::move(taps), half, half);
}

Kernel log_kernel(double sigma) {
  if (!(sigma > 0.0))
    throw Error(Errc::NonPositiveSigma, "log_kernel requires sigma > 0");
  const int half = static_cast<int>(std::ceil(4.0 * sigma));
  const int size = 2 * half + 1;
  const size_t n = static_cast<size_t>(size) * size;
  std::vector<double> gauss(n);
  const double s2 = sigma * sigma;
  const double inv2s2 = 1.0 / (2.0 * s2);
  double gsum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double y = i - half;
    for (int j = 0; j < size; ++j) {
      const double x = j - half;
      const double g = std::exp(-(x * x + y * y) * inv2s2);
      gauss[static_cast<size_t>(i) * size + j] = g;
      gsum += g;
    }
  }
  std::vector<double> taps(n);
  double tsum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double y = i - half;
    for (int j = 0; j < size; ++j) {
      const double x = j - half;
      const double r2 = x * x + y * y;
      const double v = (r2 - 2.0 * s2) / (s2 * s2) * gauss[static_cast<size_t>(i) * size + j] / gsum;
      taps[static_cast<size_t>(i) * size + j] = v;
      tsum += v;
    }
  }
  const double mean = tsum / static_cast<double>(n);
  for (auto& t : taps) t -= mean;
  return Kernel(size, size, std::move(taps), half, half);
}

}  // namespace edgebench

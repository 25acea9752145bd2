#include "edgebench/edges.hpp"

#include <cmath>
#include <vector>

#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"
#include "edgebench/kernel.hpp"

namespace edgebench {

EdgeMap threshold_edges(const GradientField& gf, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(Errc::ThresholdOutOfRange, "threshold must lie in [0,1]");
  EdgeMap em(gf.magnitude.width, gf.magnitude.height);
  for (size_t i = 0; i < em.bits.size(); ++i)
    em.bits[i] = gf.magnitude.pixels[i] > t ? 1 : 0;
  return em;
}

GrayImage non_max_suppression(const GradientField& gf) {
  const int w = gf.magnitude.width, h = gf.magnitude.height;
  GrayImage out(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double m = gf.magnitude.at(r, c);
      // Gradient orientation folded to [0, 180) degrees, then bucketed into
      // the four principal directions.
      double theta = gf.direction.at(r, c);
      if (theta < 0) theta += M_PI;
      double deg = theta * 180.0 / M_PI;
      if (deg >= 180.0) deg -= 180.0;
      int dr, dc;
      if (deg < 22.5 || deg >= 157.5) {
        dr = 0; dc = 1;   // horizontal gradient: compare east/west
      } else if (deg < 67.5) {
        dr = 1; dc = 1;   // down-right / up-left
      } else if (deg < 112.5) {
        dr = 1; dc = 0;   // vertical gradient: compare north/south
      } else {
        dr = 1; dc = -1;  // down-left / up-right
      }
      bool keep = true;
      for (int s = -1; s <= 1; s += 2) {
        const int rr = r + s * dr, cc = c + s * dc;
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
        if (m < gf.magnitude.at(rr, cc)) {
          keep = false;
          break;
        }
      }
      out.at(r, c) = keep ? m : 0.0;
    }
  }
  return out;
}

namespace detail {

EdgeMap hysteresis_unchecked(const GrayImage& suppressed, double low, double high) {
  const int w = suppressed.width, h = suppressed.height;
  EdgeMap em(w, h);
  std::vector<long> worklist;
  for (long i = 0; i < suppressed.pixel_count(); ++i) {
    if (suppressed.pixels[i] > high) {
      em.bits[i] = 1;
      worklist.push_back(i);
    }
  }
  while (!worklist.empty()) {
    const long p = worklist.back();
    worklist.pop_back();
    const int r = static_cast<int>(p / w), c = static_cast<int>(p % w);
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const int rr = r + dr, cc = c + dc;
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
        const long q = static_cast<long>(rr) * w + cc;
        if (!em.bits[q] && suppressed.pixels[q] > low) {
          em.bits[q] = 1;
          worklist.push_back(q);
        }
      }
    }
  }
  return em;
}

}  // namespace detail

EdgeMap hysteresis(const GrayImage& suppressed, double low, double high) {
  if (!(low >= 0.0 && high <= 1.0))
    throw Error(Errc::ThresholdOutOfRange, "hysteresis thresholds must lie in [0,1]");
  if (!(low < high))
    throw Error(Errc::InvalidThresholdPair, "hysteresis requires low < high");
  return detail::hysteresis_unchecked(suppressed, low, high);
}

EdgeMap canny(const GrayImage& img, double low, double high, double sigma) {
  if (!(low >= 0.0 && high <= 1.0))
    throw Error(Errc::ThresholdOutOfRange, "canny thresholds must lie in [0,1]");
  if (!(low < high))
    throw Error(Errc::InvalidThresholdPair, "canny requires low < high");
  const GrayImage smoothed = convolve(img, gaussian_kernel(sigma), BorderPolicy::Replicate);
  const GradientField gf = gradient(smoothed, GradientOp::Sobel);
  return detail::hysteresis_unchecked(non_max_suppression(gf), low, high);
}

EdgeMap zero_crossings(const GrayImage& filtered, double t) {
  if (!(t >= 0.0))
    throw Error(Errc::NegativeThreshold, "slope threshold must be non-negative");
  const int w = filtered.width, h = filtered.height;
  EdgeMap em(w, h);
  auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
  // Examine each forward pair once (right and down), so "earlier in row-major
  // order" is always the first element of the pair.
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double fp = filtered.at(r, c);
      for (int k = 0; k < 2; ++k) {
        const int rr = r + k, cc = c + 1 - k;
        if (rr >= h || cc >= w) continue;
        const double fq = filtered.at(rr, cc);
        if (sgn(fp) == sgn(fq)) continue;
        if (!(std::abs(fp - fq) > t)) continue;
        if (std::abs(fp) <= std::abs(fq))
          em.set(r, c, true);
        else
          em.set(rr, cc, true);
      }
    }
  }
  return em;
}

}  // namespace edgebench

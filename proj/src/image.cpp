#include "edgebench/image.hpp"

#include <algorithm>

#include "edgebench/error.hpp"

namespace edgebench {

GrayImage::GrayImage(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1)
    throw Error(Errc::InvalidArgument, "image dimensions must be at least 1x1");
  pixels.assign(static_cast<size_t>(w) * h, fill);
}

EdgeMap::EdgeMap(int w, int h) : width(w), height(h) {
  if (w < 1 || h < 1)
    throw Error(Errc::InvalidArgument, "edge map dimensions must be at least 1x1");
  bits.assign(static_cast<size_t>(w) * h, 0);
}

long EdgeMap::count() const {
  long n = 0;
  for (auto b : bits) n += b;
  return n;
}

GrayImage normalize_minmax(const GrayImage& img) {
  GrayImage out(img.width, img.height);
  auto [mn_it, mx_it] = std::minmax_element(img.pixels.begin(), img.pixels.end());
  const double mn = *mn_it, mx = *mx_it;
  if (mx > mn) {
    const double span = mx - mn;
    for (size_t i = 0; i < img.pixels.size(); ++i)
      out.pixels[i] = (img.pixels[i] - mn) / span;
  }
  return out;
}

GrayImage to_image(const EdgeMap& em) {
  GrayImage out(em.width, em.height);
  for (size_t i = 0; i < em.bits.size(); ++i)
    out.pixels[i] = em.bits[i] ? 1.0 : 0.0;
  return out;
}

}  // namespace edgebench

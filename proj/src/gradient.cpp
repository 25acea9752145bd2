#include "edgebench/gradient.hpp"

#include <cmath>

#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"
#include "edgebench/kernel.hpp"

namespace edgebench {

namespace {

Kernel sobel_gx() { return Kernel(3, 3, {-1, 0, 1, -2, 0, 2, -1, 0, 1}, 1, 1); }
Kernel sobel_gy() { return Kernel(3, 3, {-1, -2, -1, 0, 0, 0, 1, 2, 1}, 1, 1); }
Kernel prewitt_gx() { return Kernel(3, 3, {-1, 0, 1, -1, 0, 1, -1, 0, 1}, 1, 1); }
Kernel prewitt_gy() { return Kernel(3, 3, {-1, -1, -1, 0, 0, 0, 1, 1, 1}, 1, 1); }
Kernel roberts_g1() { return Kernel(2, 2, {1, 0, 0, -1}, 0, 0); }
Kernel roberts_g2() { return Kernel(2, 2, {0, 1, -1, 0}, 0, 0); }

}  // namespace

GradientField gradient(const GrayImage& img, GradientOp op) {
  const int mask = op == GradientOp::Roberts ? 2 : 3;
  if (img.width < mask || img.height < mask)
    throw Error(Errc::ImageTooSmall, "image smaller than the operator masks");

  Kernel kx, ky;
  switch (op) {
    case GradientOp::Sobel: kx = sobel_gx(); ky = sobel_gy(); break;
    case GradientOp::Prewitt: kx = prewitt_gx(); ky = prewitt_gy(); break;
    case GradientOp::Roberts: kx = roberts_g1(); ky = roberts_g2(); break;
  }

  GradientField gf;
  gf.gx = convolve(img, kx, BorderPolicy::Replicate);
  gf.gy = convolve(img, ky, BorderPolicy::Replicate);

  GrayImage raw(img.width, img.height);
  gf.direction = GrayImage(img.width, img.height);
  for (size_t i = 0; i < raw.pixels.size(); ++i) {
    const double x = gf.gx.pixels[i], y = gf.gy.pixels[i];
    raw.pixels[i] = std::sqrt(x * x + y * y);
    gf.direction.pixels[i] = std::atan2(y, x);
  }
  gf.magnitude = normalize_minmax(raw);
  return gf;
}

}  // namespace edgebench

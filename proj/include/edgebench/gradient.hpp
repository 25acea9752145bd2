#pragma once

#include "edgebench/image.hpp"

namespace edgebench {

enum class GradientOp { Sobel, Prewitt, Roberts };

/// First-derivative responses of one image. magnitude is the min-max
/// normalized sqrt(gx^2+gy^2) (max exactly 1 unless the field is identically
/// zero); direction is atan2(gy, gx) per pixel, in (-pi, pi].
struct GradientField {
  GrayImage gx;
  GrayImage gy;
  GrayImage magnitude;
  GrayImage direction;
};

/// Apply the canonical 3x3 Sobel/Prewitt masks or the 2x2 Roberts pair
/// (anchor at the top-left tap), replicate border.
GradientField gradient(const GrayImage& img, GradientOp op);

}  // namespace edgebench

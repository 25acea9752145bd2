#pragma once

#include <optional>

#include "edgebench/edges.hpp"
#include "edgebench/image.hpp"
#include "edgebench/kernel.hpp"

namespace edgebench {

enum class Method { Sobel, Prewitt, Roberts, Canny, Log, ZeroCross };

/// One detector invocation. Single-threshold methods read `threshold`; Canny
/// reads `low`/`high`, or falls back to (0.4 * threshold, threshold) when
/// only `threshold` was supplied. `sigma` defaults to sqrt(2) for Canny and
/// 2 for Log/ZeroCross. ZeroCross may carry its own filter kernel; without
/// one it behaves like Log.
struct DetectorConfig {
  Method method = Method::Sobel;
  std::optional<double> threshold;
  std::optional<double> low;
  std::optional<double> high;
  std::optional<double> sigma;
  std::optional<Kernel> zero_cross_kernel;

  static DetectorConfig single(Method m, double threshold);
  static DetectorConfig canny_pair(double low, double high,
                                   std::optional<double> sigma = std::nullopt);
};

/// Fully materialized parameters for one run (what the CLI records in the
/// run manifest).
struct ResolvedDetector {
  Method method;
  double threshold = 0.0;  // single-threshold methods
  double low = 0.0;        // Canny
  double high = 0.0;       // Canny
  double sigma = 0.0;      // Canny / Log / ZeroCross
};

/// Validate cfg and materialize defaults; throws ThresholdOutOfRange,
/// InvalidThresholdPair, NonPositiveSigma or InvalidArgument.
ResolvedDetector resolve(const DetectorConfig& cfg);

/// Uniform dispatcher over the six operators.
EdgeMap detect(const GrayImage& img, const DetectorConfig& cfg);

constexpr double kCannyDefaultSigma = 1.4142135623730951;  // sqrt(2)
constexpr double kLogDefaultSigma = 2.0;
constexpr double kCannyLowRatio = 0.4;  // low = ratio * high for one-threshold configs

}  // namespace edgebench

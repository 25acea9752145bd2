#include "edgebench/detector.hpp"

#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"

namespace edgebench {

DetectorConfig DetectorConfig::single(Method m, double threshold) {
  DetectorConfig cfg;
  cfg.method = m;
  cfg.threshold = threshold;
  return cfg;
}

DetectorConfig DetectorConfig::canny_pair(double low, double high, std::optional<double> sigma) {
  DetectorConfig cfg;
  cfg.method = Method::Canny;
  cfg.low = low;
  cfg.high = high;
  cfg.sigma = sigma;
  return cfg;
}

namespace {

double checked_threshold(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(Errc::ThresholdOutOfRange, "threshold must lie in [0,1]");
  return t;
}

}  // namespace

ResolvedDetector resolve(const DetectorConfig& cfg) {
  ResolvedDetector r;
  r.method = cfg.method;
  switch (cfg.method) {
    case Method::Sobel:
    case Method::Prewitt:
    case Method::Roberts:
      if (!cfg.threshold)
        throw Error(Errc::InvalidArgument, "gradient methods require a threshold");
      r.threshold = checked_threshold(*cfg.threshold);
      break;
    case Method::Canny: {
      r.sigma = cfg.sigma.value_or(kCannyDefaultSigma);
      if (!(r.sigma > 0.0))
        throw Error(Errc::NonPositiveSigma, "canny requires sigma > 0");
      if (cfg.low && cfg.high) {
        r.low = checked_threshold(*cfg.low);
        r.high = checked_threshold(*cfg.high);
      } else if (cfg.threshold && !cfg.low && !cfg.high) {
        r.high = checked_threshold(*cfg.threshold);
        r.low = kCannyLowRatio * r.high;
      } else {
        throw Error(Errc::InvalidArgument,
                    "canny requires either low+high or a single threshold");
      }
      if (!(r.low < r.high))
        throw Error(Errc::InvalidThresholdPair, "canny requires low < high");
      break;
    }
    case Method::Log:
    case Method::ZeroCross:
      if (!cfg.threshold)
        throw Error(Errc::InvalidArgument, "zero-crossing methods require a threshold");
      r.threshold = checked_threshold(*cfg.threshold);
      r.sigma = cfg.sigma.value_or(kLogDefaultSigma);
      if (!(r.sigma > 0.0))
        throw Error(Errc::NonPositiveSigma, "log/zerocross require sigma > 0");
      break;
  }
  return r;
}

EdgeMap detect(const GrayImage& img, const DetectorConfig& cfg) {
  const ResolvedDetector r = resolve(cfg);
  switch (r.method) {
    case Method::Sobel:
      return threshold_edges(gradient(img, GradientOp::Sobel), r.threshold);
    case Method::Prewitt:
      return threshold_edges(gradient(img, GradientOp::Prewitt), r.threshold);
    case Method::Roberts:
      return threshold_edges(gradient(img, GradientOp::Roberts), r.threshold);
    case Method::Canny:
      return canny(img, r.low, r.high, r.sigma);
    case Method::Log:
      return zero_crossings(convolve(img, log_kernel(r.sigma), BorderPolicy::Replicate),
                            r.threshold);
    case Method::ZeroCross: {
      const Kernel k = cfg.zero_cross_kernel ? *cfg.zero_cross_kernel : log_kernel(r.sigma);
      return zero_crossings(convolve(img, k, BorderPolicy::Replicate), r.threshold);
    }
  }
  throw Error(Errc::InvalidArgument, "unknown detector method");
}

}  // namespace edgebench

#pragma once

#include <string>
#include <vector>

#include "edgebench/detector.hpp"
#include "edgebench/image.hpp"

namespace edgebench {

/// Ground-truth edge pixels of one feature of interest.
struct TruthMask {
  EdgeMap mask;
  std::string feature_label;
};

struct MatchScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct BandScore {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct BandReport {
  std::vector<BandScore> rows;  // one per band, stack order
  std::string best_band;        // max F1, ties to the earliest band
};

/// Default Chebyshev matching tolerance: detectors localize on either side
/// of a boundary, so exact matching would punish correct output.
constexpr int kDefaultMatchTolerance = 1;

/// Build a TruthMask from a grayscale image thresholded at 0.5.
TruthMask truth_from_image(const GrayImage& img, std::string feature_label);

/// Run one detector configuration on every band, preserving order.
std::vector<EdgeMap> run_per_band(const BandStack& stack, const DetectorConfig& cfg);

/// Chebyshev-tolerant precision/recall/F1. A detected pixel is a true
/// positive when some truth pixel lies within distance tol, and a truth
/// pixel counts as recalled when some detected pixel does. Empty sets score
/// by convention: no detections and no truth is perfect; otherwise an empty
/// side scores zero.
MatchScore score_against_truth(const EdgeMap& em, const TruthMask& truth, int tol);

/// Detect per band, score each against the truth, and pick the best band.
BandReport band_report(const BandStack& stack, const DetectorConfig& cfg,
                       const TruthMask& truth, int tol = kDefaultMatchTolerance);

}  // namespace edgebench

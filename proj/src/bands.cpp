#include "edgebench/bands.hpp"

#include <algorithm>

#include "edgebench/error.hpp"

namespace edgebench {

namespace {

// True when any set pixel of `other` lies within Chebyshev distance tol of
// (r, c).
bool matched_within(const EdgeMap& other, int r, int c, int tol) {
  const int r0 = std::max(0, r - tol), r1 = std::min(other.height - 1, r + tol);
  const int c0 = std::max(0, c - tol), c1 = std::min(other.width - 1, c + tol);
  for (int rr = r0; rr <= r1; ++rr)
    for (int cc = c0; cc <= c1; ++cc)
      if (other.at(rr, cc)) return true;
  return false;
}

}  // namespace

TruthMask truth_from_image(const GrayImage& img, std::string feature_label) {
  TruthMask t;
  t.feature_label = std::move(feature_label);
  t.mask = EdgeMap(img.width, img.height);
  for (size_t i = 0; i < img.pixels.size(); ++i)
    t.mask.bits[i] = img.pixels[i] > 0.5 ? 1 : 0;
  return t;
}

std::vector<EdgeMap> run_per_band(const BandStack& stack, const DetectorConfig& cfg) {
  if (stack.bands.empty()) throw Error(Errc::EmptyStack, "band stack is empty");
  std::vector<EdgeMap> maps;
  maps.reserve(stack.bands.size());
  for (const auto& band : stack.bands) maps.push_back(detect(band, cfg));
  return maps;
}

MatchScore score_against_truth(const EdgeMap& em, const TruthMask& truth, int tol) {
  if (em.width != truth.mask.width || em.height != truth.mask.height)
    throw Error(Errc::DimensionMismatch, "edge map and truth mask differ in size");
  if (tol < 0) throw Error(Errc::InvalidArgument, "matching tolerance must be >= 0");

  long detected = 0, truth_px = 0, tp = 0, recalled = 0;
  for (int r = 0; r < em.height; ++r) {
    for (int c = 0; c < em.width; ++c) {
      if (em.at(r, c)) {
        ++detected;
        if (matched_within(truth.mask, r, c, tol)) ++tp;
      }
      if (truth.mask.at(r, c)) {
        ++truth_px;
        if (matched_within(em, r, c, tol)) ++recalled;
      }
    }
  }

  MatchScore s;
  s.precision = detected > 0 ? static_cast<double>(tp) / detected : (truth_px == 0 ? 1.0 : 0.0);
  s.recall = truth_px > 0 ? static_cast<double>(recalled) / truth_px : (detected == 0 ? 1.0 : 0.0);
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

BandReport band_report(const BandStack& stack, const DetectorConfig& cfg,
                       const TruthMask& truth, int tol) {
  const std::vector<EdgeMap> maps = run_per_band(stack, cfg);
  BandReport report;
  report.rows.reserve(maps.size());
  size_t best = 0;
  for (size_t i = 0; i < maps.size(); ++i) {
    const MatchScore s = score_against_truth(maps[i], truth, tol);
    report.rows.push_back({stack.labels[i], s.precision, s.recall, s.f1});
    if (report.rows[i].f1 > report.rows[best].f1) best = i;
  }
  report.best_band = stack.labels[best];
  return report;
}

}  // namespace edgebench

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "edgebench/detector.hpp"

namespace edgebench {

struct TimingRow {
  Method method;
  int side = 0;                 // square scene side length in pixels
  double median_seconds = 0.0;  // over `repeats` runs
  std::optional<std::size_t> peak_aux_bytes;  // best effort, unset when not measured
};

struct TimingReport {
  int repeats = 0;
  std::vector<TimingRow> rows;  // per method, sides ascending
};

/// Time detect() on a fixed checkerboard scene per side length, strictly
/// sequentially with the internal thread cap pinned to one worker. Sides
/// must be ascending and repeats >= 3; the median of the repeat wall times
/// is recorded.
TimingReport timing_study(std::span<const DetectorConfig> methods,
                          std::span<const int> sides, int repeats);

}  // namespace edgebench

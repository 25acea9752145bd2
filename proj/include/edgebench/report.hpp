#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgebench/bands.hpp"
#include "edgebench/bench.hpp"
#include "edgebench/detector.hpp"
#include "edgebench/noise.hpp"
#include "edgebench/sweep.hpp"

namespace edgebench {

std::string method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Row order used by every summary table: sobel, canny, roberts, prewitt,
/// log, zerocross.
const std::vector<Method>& summary_order();

/// "threshold,density" CSV; the extracted range goes into a leading comment.
std::string sweep_csv(const SweepResult& sr);

/// One markdown table row per sweep: method | min | ideal | max | features.
std::string sweep_markdown(const std::string& method, const SweepResult& sr,
                           const std::string& features);

/// "label,precision,recall,f1" rows plus a "# best_band=..." footer.
std::string band_csv(const BandReport& report);

std::string noise_csv(const NoiseReport& report);

std::string timing_csv(const TimingReport& report);

/// Summary table with the canonical benchmark columns
/// (method | time | space | noise sensitivity | false edges); unmeasured
/// cells show "-". Timing cells use the largest benchmarked side; noise
/// cells use the highest density, with a median-false-edge ranking line
/// appended.
std::string timing_markdown(const TimingReport& report);
std::string noise_markdown(const NoiseReport& report);

}  // namespace edgebench

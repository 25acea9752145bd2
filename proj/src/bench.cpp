#include "edgebench/bench.hpp"

#include <algorithm>
#include <chrono>

#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"
#include "edgebench/synth.hpp"

namespace edgebench {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

GrayImage bench_scene(int side) {
  const int block = std::max(1, side / 8);
  return synth_scene(SceneSpec::checker(side, side, block, 0.2, 0.8));
}

}  // namespace

TimingReport timing_study(std::span<const DetectorConfig> methods,
                          std::span<const int> sides, int repeats) {
  if (repeats < 3)
    throw Error(Errc::InvalidArgument, "timing_study requires repeats >= 3");
  if (sides.empty())
    throw Error(Errc::InvalidArgument, "timing_study requires at least one side length");
  for (size_t i = 0; i < sides.size(); ++i) {
    if (sides[i] < 8) throw Error(Errc::InvalidArgument, "side lengths must be >= 8");
    if (i > 0 && sides[i] <= sides[i - 1])
      throw Error(Errc::InvalidArgument, "side lengths must be ascending");
  }
  for (const auto& cfg : methods) resolve(cfg);

  ThreadCapGuard pin(1);  // contention-free, comparable timings
  TimingReport report;
  report.repeats = repeats;

  for (const auto& cfg : methods) {
    for (int side : sides) {
      const GrayImage scene = bench_scene(side);
      std::vector<double> times;
      times.reserve(repeats);
      for (int rep = 0; rep < repeats; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const EdgeMap em = detect(scene, cfg);
        const auto t1 = std::chrono::steady_clock::now();
        // keep the result alive so the detect call cannot be elided
        if (em.width != side) throw Error(Errc::InvalidArgument, "unexpected result size");
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      TimingRow row;
      row.method = cfg.method;
      row.side = side;
      row.median_seconds = median(std::move(times));
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace edgebench

#pragma once

#include "edgebench/image.hpp"
#include "edgebench/kernel.hpp"

namespace edgebench {

/// 2-D correlation of img with k. Output has the input's dimensions and is
/// not clamped; out-of-range reads are resolved by the border policy.
/// Work may be split across rows (bounded by max_threads()); results are
/// bit-identical to a sequential pass.
GrayImage convolve(const GrayImage& img, const Kernel& k,
                   BorderPolicy border = BorderPolicy::Replicate);

/// Current cap on internal worker threads. Defaults to EDGEBENCH_THREADS if
/// set to a positive value, otherwise the hardware concurrency.
int max_threads();

/// Override the thread cap; n <= 0 restores the default.
void set_max_threads(int n);

/// Pins the thread cap for a scope (used by the timing benchmark).
class ThreadCapGuard {
public:
  explicit ThreadCapGuard(int n);
  ~ThreadCapGuard();
  ThreadCapGuard(const ThreadCapGuard&) = delete;
  ThreadCapGuard& operator=(const ThreadCapGuard&) = delete;

private:
  int saved_;
};

}  // namespace edgebench

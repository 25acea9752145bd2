#include "edgebench/convolve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "edgebench/error.hpp"

namespace edgebench {

namespace {

std::atomic<int> g_thread_override{0};  // 0 = use default

int default_threads() {
  static const int resolved = [] {
    if (const char* env = std::getenv("EDGEBENCH_THREADS")) {
      const int n = std::atoi(env);
      if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
  }();
  return resolved;
}

// Resolve an out-of-range coordinate against [0, n). Returns -1 for Zero
// (contribution dropped).
inline int resolve_index(int i, int n, BorderPolicy border) {
  if (i >= 0 && i < n) return i;
  switch (border) {
    case BorderPolicy::Replicate:
      return i < 0 ? 0 : n - 1;
    case BorderPolicy::Reflect:
      // edge-inclusive mirror: -1 -> 0, -2 -> 1, n -> n-1, ...
      while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
      }
      return i;
    case BorderPolicy::Zero:
      return -1;
  }
  return -1;
}

}  // namespace

int max_threads() {
  const int ov = g_thread_override.load();
  return ov > 0 ? ov : default_threads();
}

void set_max_threads(int n) { g_thread_override.store(n > 0 ? n : 0); }

ThreadCapGuard::ThreadCapGuard(int n) : saved_(g_thread_override.load()) {
  g_thread_override.store(n > 0 ? n : 0);
}

ThreadCapGuard::~ThreadCapGuard() { g_thread_override.store(saved_); }

GrayImage convolve(const GrayImage& img, const Kernel& k, BorderPolicy border) {
  if (k.width > img.width || k.height > img.height)
    throw Error(Errc::KernelLargerThanImage, "kernel exceeds image dimensions");

  GrayImage out(img.width, img.height);

  auto run_rows = [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      for (int c = 0; c < img.width; ++c) {
        double acc = 0.0;
        for (int i = 0; i < k.height; ++i) {
          const int rr = resolve_index(r + i - k.anchor_row, img.height, border);
          if (rr < 0) continue;
          for (int j = 0; j < k.width; ++j) {
            const int cc = resolve_index(c + j - k.anchor_col, img.width, border);
            if (cc < 0) continue;
            acc += k.at(i, j) * img.at(rr, cc);
          }
        }
        out.at(r, c) = acc;
      }
    }
  };

  const long work = img.pixel_count() * k.width * k.height;
  int workers = max_threads();
  if (workers > img.height) workers = img.height;
  if (workers <= 1 || work < 250000) {
    run_rows(0, img.height);
    return out;
  }

  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (img.height + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int r0 = w * chunk;
    const int r1 = std::min(img.height, r0 + chunk);
    if (r0 >= r1) break;
    pool.emplace_back(run_rows, r0, r1);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace edgebench

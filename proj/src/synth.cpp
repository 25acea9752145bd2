#include "edgebench/synth.hpp"

#include <string>

#include "edgebench/error.hpp"

namespace edgebench {

namespace {

void check_frame(const SceneSpec& s) {
  if (s.width < 1 || s.height < 1)
    throw Error(Errc::GeometryOutOfBounds, "scene dimensions must be at least 1x1");
  if (s.lo < 0.0 || s.hi > 1.0 || s.lo > s.hi)
    throw Error(Errc::InvalidArgument, "scene levels must satisfy 0 <= lo <= hi <= 1");
}

void check_geometry(const SceneSpec& s) {
  check_frame(s);
  switch (s.kind) {
    case SceneKind::VStep:
      if (s.split < 1 || s.split > s.width - 1)
        throw Error(Errc::GeometryOutOfBounds, "vstep split must leave both regions non-empty");
      break;
    case SceneKind::Ribbon: {
      const int extent = s.vertical ? s.width : s.height;
      if (s.thickness < 1 || s.start < 0 || s.start + s.thickness > extent)
        throw Error(Errc::GeometryOutOfBounds, "ribbon does not fit inside the image");
      break;
    }
    case SceneKind::Disk:
      if (s.radius < 1 || s.cx - s.radius < 0 || s.cx + s.radius > s.width - 1 ||
          s.cy - s.radius < 0 || s.cy + s.radius > s.height - 1)
        throw Error(Errc::GeometryOutOfBounds, "disk does not fit inside the image");
      break;
    case SceneKind::Checker:
      if (s.block < 1 || s.block > s.width || s.block > s.height)
        throw Error(Errc::GeometryOutOfBounds, "checker block must fit inside the image");
      break;
  }
}

inline bool disk_inside(const SceneSpec& s, int r, int c) {
  const long dx = c - s.cx, dy = r - s.cy;
  return dx * dx + dy * dy <= static_cast<long>(s.radius) * s.radius;
}

inline bool ribbon_inside(const SceneSpec& s, int r, int c) {
  const int x = s.vertical ? c : r;
  return x >= s.start && x < s.start + s.thickness;
}

inline bool checker_hi(const SceneSpec& s, int r, int c) {
  return ((r / s.block) + (c / s.block)) % 2 == 1;
}

bool pixel_hi(const SceneSpec& s, int r, int c) {
  switch (s.kind) {
    case SceneKind::VStep: return c >= s.split;
    case SceneKind::Ribbon: return ribbon_inside(s, r, c);
    case SceneKind::Disk: return disk_inside(s, r, c);
    case SceneKind::Checker: return checker_hi(s, r, c);
  }
  return false;
}

}  // namespace

SceneSpec SceneSpec::vstep(int w, int h, int split, double lo, double hi) {
  SceneSpec s;
  s.kind = SceneKind::VStep;
  s.width = w; s.height = h; s.split = split; s.lo = lo; s.hi = hi;
  return s;
}

SceneSpec SceneSpec::ribbon(int w, int h, int thickness, bool vertical, int start,
                            double lo, double hi) {
  SceneSpec s;
  s.kind = SceneKind::Ribbon;
  s.width = w; s.height = h; s.thickness = thickness; s.vertical = vertical;
  s.start = start; s.lo = lo; s.hi = hi;
  return s;
}

SceneSpec SceneSpec::ribbon(int w, int h, int thickness, bool vertical,
                            double lo, double hi) {
  const int extent = vertical ? w : h;
  return ribbon(w, h, thickness, vertical, (extent - thickness) / 2, lo, hi);
}

SceneSpec SceneSpec::disk(int w, int h, int cx, int cy, int radius, double lo, double hi) {
  SceneSpec s;
  s.kind = SceneKind::Disk;
  s.width = w; s.height = h; s.cx = cx; s.cy = cy; s.radius = radius; s.lo = lo; s.hi = hi;
  return s;
}

SceneSpec SceneSpec::checker(int w, int h, int block, double lo, double hi) {
  SceneSpec s;
  s.kind = SceneKind::Checker;
  s.width = w; s.height = h; s.block = block; s.lo = lo; s.hi = hi;
  return s;
}

GrayImage synth_scene(const SceneSpec& spec) {
  check_geometry(spec);
  GrayImage img(spec.width, spec.height);
  for (int r = 0; r < spec.height; ++r)
    for (int c = 0; c < spec.width; ++c)
      img.at(r, c) = pixel_hi(spec, r, c) ? spec.hi : spec.lo;
  return img;
}

EdgeMap synth_truth(const SceneSpec& spec) {
  check_geometry(spec);
  EdgeMap truth(spec.width, spec.height);
  static constexpr int dr[4] = {0, 0, -1, 1};
  static constexpr int dc[4] = {-1, 1, 0, 0};
  for (int r = 0; r < spec.height; ++r) {
    for (int c = 0; c < spec.width; ++c) {
      if (pixel_hi(spec, r, c)) continue;  // mark the low side only
      for (int k = 0; k < 4; ++k) {
        const int rr = r + dr[k], cc = c + dc[k];
        if (rr < 0 || rr >= spec.height || cc < 0 || cc >= spec.width) continue;
        if (pixel_hi(spec, rr, cc)) {
          truth.set(r, c, true);
          break;
        }
      }
    }
  }
  return truth;
}

}  // namespace edgebench

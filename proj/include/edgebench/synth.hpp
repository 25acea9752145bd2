#pragma once

#include "edgebench/image.hpp"

namespace edgebench {

enum class SceneKind { VStep, Ribbon, Disk, Checker };

/// Parameters for one synthetic two-level scene. Unused fields are ignored
/// for kinds that do not need them; the factory helpers fill sane defaults.
struct SceneSpec {
  SceneKind kind = SceneKind::VStep;
  int width = 0;
  int height = 0;
  double lo = 0.0;  // background intensity
  double hi = 1.0;  // feature intensity

  int split = 0;        // VStep: first column at hi
  int thickness = 0;    // Ribbon: strip thickness in pixels
  bool vertical = false;  // Ribbon orientation (false = horizontal strip)
  int start = 0;        // Ribbon: first row (horizontal) or column (vertical)
  int cx = 0, cy = 0;   // Disk center (col, row)
  int radius = 0;       // Disk radius in pixels
  int block = 0;        // Checker tile side

  static SceneSpec vstep(int w, int h, int split, double lo = 0.0, double hi = 1.0);
  static SceneSpec ribbon(int w, int h, int thickness, bool vertical, int start,
                          double lo = 0.0, double hi = 1.0);
  /// Centered ribbon.
  static SceneSpec ribbon(int w, int h, int thickness, bool vertical,
                          double lo = 0.0, double hi = 1.0);
  static SceneSpec disk(int w, int h, int cx, int cy, int radius,
                        double lo = 0.0, double hi = 1.0);
  static SceneSpec checker(int w, int h, int block, double lo = 0.0, double hi = 1.0);
};

/// Deterministic scene synthesis; identical parameters give byte-identical
/// images. Throws GeometryOutOfBounds when the feature does not fit.
GrayImage synth_scene(const SceneSpec& spec);

/// Analytic boundary mask for a scene, marking the low-intensity pixel on
/// each lo/hi transition (4-adjacency). For VStep that is the last low-side
/// column; for Ribbon the two rows/columns flanking the strip; for Disk the
/// ring of outside pixels whose center distance crosses the radius toward a
/// 4-neighbor; for Checker the lo-tile border pixels.
EdgeMap synth_truth(const SceneSpec& spec);

}  // namespace edgebench

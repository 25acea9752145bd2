#pragma once

#include <string>

#include "edgebench/image.hpp"

namespace edgebench {

/// Read a PGM file (P2 ASCII or P5 binary, maxval 1..65535, '#' comments
/// skipped in the header). Samples are scaled to [0,1] by dividing by maxval.
GrayImage load_pgm(const std::string& path);

/// Write a P5 PGM with maxval 255; pixel p is stored as round(p*255).
/// Callers are expected to pass values in [0,1].
void save_pgm(const GrayImage& img, const std::string& path);

/// Load a multiband stack from a manifest: one "<label>\t<pgm path>" line per
/// band, paths relative to the manifest, blank lines ignored. All bands must
/// agree in size and labels must be unique.
BandStack load_band_stack(const std::string& manifest_path);

}  // namespace edgebench

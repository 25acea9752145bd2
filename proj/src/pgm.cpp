// Netpbm PGM reader/writer and the band-manifest loader.

#include "edgebench/pgm.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "edgebench/error.hpp"

namespace edgebench {

namespace {

struct Cursor {
  const std::string& data;
  size_t pos = 0;

  bool eof() const { return pos >= data.size(); }

  // Whitespace and '#'-to-end-of-line comments.
  void skip_separators() {
    while (!eof()) {
      const char c = data[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '#') {
        while (!eof() && data[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  long next_uint(const char* what) {
    skip_separators();
    if (eof() || !std::isdigit(static_cast<unsigned char>(data[pos])))
      throw Error(Errc::MalformedHeader, std::string("expected unsigned integer for ") + what);
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
      v = v * 10 + (data[pos] - '0');
      if (v > 1 << 30) throw Error(Errc::MalformedHeader, std::string("absurd value for ") + what);
      ++pos;
    }
    return v;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoFailure, "read error on " + path);
  return std::move(ss).str();
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
  const std::string data = read_file(path);
  Cursor cur{data};

  cur.skip_separators();
  if (data.size() - cur.pos < 2 || data[cur.pos] != 'P' ||
      (data[cur.pos + 1] != '2' && data[cur.pos + 1] != '5'))
    throw Error(Errc::MalformedHeader, "not a P2/P5 PGM: " + path);
  const bool binary = data[cur.pos + 1] == '5';
  cur.pos += 2;

  const long width = cur.next_uint("width");
  const long height = cur.next_uint("height");
  if (width < 1 || height < 1)
    throw Error(Errc::MalformedHeader, "invalid dimensions in " + path);
  const long maxval = cur.next_uint("maxval");
  if (maxval < 1 || maxval > 65535)
    throw Error(Errc::UnsupportedMaxval, "maxval " + std::to_string(maxval) + " in " + path);

  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  const size_t samples = static_cast<size_t>(width) * height;
  const double inv = 1.0 / static_cast<double>(maxval);

  if (binary) {
    // Exactly one separator byte between maxval and the raster.
    if (cur.eof() || !std::isspace(static_cast<unsigned char>(data[cur.pos])))
      throw Error(Errc::MalformedHeader, "missing separator before raster in " + path);
    ++cur.pos;
    const int bytes_per = maxval > 255 ? 2 : 1;
    if (data.size() - cur.pos < samples * bytes_per)
      throw Error(Errc::TruncatedData, "raster shorter than header promises in " + path);
    const unsigned char* raw = reinterpret_cast<const unsigned char*>(data.data() + cur.pos);
    for (size_t i = 0; i < samples; ++i) {
      long v = bytes_per == 1 ? raw[i] : (raw[2 * i] << 8 | raw[2 * i + 1]);  // big-endian
      if (v > maxval) v = maxval;
      img.pixels[i] = v * inv;
    }
  } else {
    for (size_t i = 0; i < samples; ++i) {
      cur.skip_separators();
      if (cur.eof())
        throw Error(Errc::TruncatedData, "fewer samples than header promises in " + path);
      long v = cur.next_uint("sample");
      if (v > maxval) v = maxval;
      img.pixels[i] = v * inv;
    }
  }
  return img;
}

void save_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoFailure, "cannot create " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::string raster(img.pixels.size(), '\0');
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    long v = std::lround(img.pixels[i] * 255.0);
    if (v < 0) v = 0;
    if (v > 255) v = 255;
    raster[i] = static_cast<char>(v);
  }
  out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
  out.flush();
  if (!out) throw Error(Errc::IoFailure, "write error on " + path);
}

BandStack load_band_stack(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  if (!fs::exists(manifest_path))
    throw Error(Errc::MissingFile, "band manifest not found: " + manifest_path);
  std::ifstream in(manifest_path);
  if (!in) throw Error(Errc::IoFailure, "cannot open " + manifest_path);

  const fs::path base = fs::path(manifest_path).parent_path();
  BandStack stack;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;  // blank
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw Error(Errc::InvalidArgument,
                  "band manifest line " + std::to_string(lineno) + ": expected <label>\\t<path>");
    const std::string label = line.substr(0, tab);
    const std::string rel = line.substr(tab + 1);
    // labels flow into unquoted CSV
    if (label.find_first_not_of(
            "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_/") !=
        std::string::npos)
      throw Error(Errc::InvalidArgument,
                  "band label '" + label + "' may only use [A-Za-z0-9_/]");
    if (!seen.insert(label).second)
      throw Error(Errc::DuplicateLabel, "duplicate band label: " + label);
    const fs::path pgm = base / rel;
    if (!fs::exists(pgm))
      throw Error(Errc::MissingFile, "band file not found: " + pgm.string());
    GrayImage band = load_pgm(pgm.string());
    if (!stack.bands.empty() &&
        (band.width != stack.bands.front().width || band.height != stack.bands.front().height))
      throw Error(Errc::DimensionMismatch,
                  "band '" + label + "' has different dimensions than the first band");
    stack.bands.push_back(std::move(band));
    stack.labels.push_back(label);
  }
  if (stack.bands.empty())
    throw Error(Errc::EmptyStack, "band manifest lists no bands: " + manifest_path);
  return stack;
}

}  // namespace edgebench

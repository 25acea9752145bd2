#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "doctest.h"
#include "edgebench/convolve.hpp"
#include "edgebench/error.hpp"
#include "edgebench/image.hpp"
#include "edgebench/kernel.hpp"
#include "edgebench/pgm.hpp"
#include "edgebench/synth.hpp"
#include "helpers.hpp"

using namespace edgebench;
using namespace testutil;

namespace {

GrayImage step8() { return synth_scene(SceneSpec::vstep(8, 8, 4, 0.0, 1.0)); }

}  // namespace

TEST_CASE("load_pgm parses P2 with scaling") {
  TempDir dir("pgm_p2");
  const std::string path = dir.file("a.pgm");
  write_text(path, "P2\n2 2\n255\n0 255 255 0\n");
  const GrayImage img = load_pgm(path);
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<double>{0.0, 1.0, 1.0, 0.0});
}

TEST_CASE("load_pgm parses P5 and maps maxval to 1.0") {
  TempDir dir("pgm_p5");
  const std::string path = dir.file("white.pgm");
  write_text(path, std::string("P5\n3 2\n255\n") + std::string(6, '\xff'));
  const GrayImage img = load_pgm(path);
  for (double p : img.pixels) CHECK(p == 1.0);
}

TEST_CASE("load_pgm handles header comments and 16-bit samples") {
  TempDir dir("pgm_misc");
  const std::string commented = dir.file("c.pgm");
  write_text(commented, "P2\n# a comment\n2 1 # trailing\n# another\n100\n50 100\n");
  const GrayImage img = load_pgm(commented);
  CHECK(img.pixels[0] == doctest::Approx(0.5));
  CHECK(img.pixels[1] == 1.0);

  const std::string wide = dir.file("w.pgm");
  // big-endian 16-bit: 0x0100 = 256, maxval 512
  write_text(wide, std::string("P5\n1 1\n512\n") + '\x01' + '\x00');
  CHECK(load_pgm(wide).pixels[0] == doctest::Approx(0.5));
}

TEST_CASE("load_pgm error paths") {
  TempDir dir("pgm_err");
  const std::string bad_magic = dir.file("m.pgm");
  write_text(bad_magic, "P7\n2 2\n255\n0 0 0 0\n");
  CHECK(throws_code(Errc::MalformedHeader, [&] { load_pgm(bad_magic); }));

  const std::string truncated = dir.file("t.pgm");
  write_text(truncated, "P2\n3 3\n255\n0 1 2 3 4 5 6 7\n");
  CHECK(throws_code(Errc::TruncatedData, [&] { load_pgm(truncated); }));

  const std::string short_raster = dir.file("s.pgm");
  write_text(short_raster, std::string("P5\n4 4\n255\n") + std::string(10, '\0'));
  CHECK(throws_code(Errc::TruncatedData, [&] { load_pgm(short_raster); }));

  const std::string maxval0 = dir.file("z.pgm");
  write_text(maxval0, "P2\n1 1\n0\n0\n");
  CHECK(throws_code(Errc::UnsupportedMaxval, [&] { load_pgm(maxval0); }));

  const std::string maxval_big = dir.file("b.pgm");
  write_text(maxval_big, "P2\n1 1\n70000\n0\n");
  CHECK(throws_code(Errc::UnsupportedMaxval, [&] { load_pgm(maxval_big); }));

  CHECK(throws_code(Errc::IoFailure, [&] { load_pgm(dir.file("nope.pgm")); }));
}

TEST_CASE("save_pgm quantizes as round(p*255)") {
  TempDir dir("pgm_save");
  GrayImage img(4, 1);
  img.pixels = {0.0, 1.0, 0.5, 0.5};
  const std::string path = dir.file("q.pgm");
  save_pgm(img, path);

  std::ifstream in(path, std::ios::binary);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::string expect_header = "P5\n4 1\n255\n";
  REQUIRE(data.size() == expect_header.size() + 4);
  CHECK(data.substr(0, expect_header.size()) == expect_header);
  const unsigned char* raw =
      reinterpret_cast<const unsigned char*>(data.data() + expect_header.size());
  CHECK(raw[0] == 0);
  CHECK(raw[1] == 255);
  CHECK(raw[2] == 128);
  CHECK(raw[3] == 128);

  GrayImage tiny(1, 1);
  tiny.pixels = {0.002};  // round(0.51) = 1
  const std::string tiny_path = dir.file("tiny.pgm");
  save_pgm(tiny, tiny_path);
  const GrayImage back = load_pgm(tiny_path);
  CHECK(back.pixels[0] == doctest::Approx(1.0 / 255.0));
}

TEST_CASE("pgm round-trip error is at most 1/510 and quantized images are fixed points") {
  TempDir dir("pgm_rt");
  std::mt19937 rng(7);
  const GrayImage img = random_image(rng, 17, 9);
  const std::string path = dir.file("rt.pgm");
  save_pgm(img, path);
  const GrayImage back = load_pgm(path);
  CHECK(max_abs_diff(img, back) <= 1.0 / 510.0 + 1e-15);

  // already-quantized image: second round trip is exact
  const std::string path2 = dir.file("rt2.pgm");
  save_pgm(back, path2);
  const GrayImage back2 = load_pgm(path2);
  CHECK(max_abs_diff(back, back2) == 0.0);
}

TEST_CASE("load_band_stack reads labeled bands in order") {
  TempDir dir("bands_ok");
  const GrayImage a = synth_scene(SceneSpec::vstep(64, 64, 32));
  save_pgm(a, dir.file("b1.pgm"));
  save_pgm(a, dir.file("b2.pgm"));
  save_pgm(a, dir.file("b3.pgm"));
  const std::string manifest = dir.file("stack.txt");
  write_text(manifest, "band1\tb1.pgm\n\nband2\tb2.pgm\nband3/IR\tb3.pgm\n");
  const BandStack stack = load_band_stack(manifest);
  REQUIRE(stack.bands.size() == 3);
  CHECK(stack.labels == std::vector<std::string>{"band1", "band2", "band3/IR"});
  CHECK(stack.bands[2].width == 64);
}

TEST_CASE("load_band_stack error paths") {
  TempDir dir("bands_err");
  save_pgm(GrayImage(64, 64, 0.5), dir.file("big.pgm"));
  save_pgm(GrayImage(32, 64, 0.5), dir.file("small.pgm"));

  const std::string mismatch = dir.file("mismatch.txt");
  write_text(mismatch, "band1\tbig.pgm\nband2\tsmall.pgm\n");
  CHECK(throws_code(Errc::DimensionMismatch, [&] { load_band_stack(mismatch); }));

  const std::string dup = dir.file("dup.txt");
  write_text(dup, "band2\tbig.pgm\nband2\tbig.pgm\n");
  CHECK(throws_code(Errc::DuplicateLabel, [&] { load_band_stack(dup); }));

  const std::string missing = dir.file("missing.txt");
  write_text(missing, "band1\tnot_there.pgm\n");
  CHECK(throws_code(Errc::MissingFile, [&] { load_band_stack(missing); }));

  const std::string bad_label = dir.file("label.txt");
  write_text(bad_label, "band one\tbig.pgm\n");
  CHECK(throws_code(Errc::InvalidArgument, [&] { load_band_stack(bad_label); }));

  CHECK(throws_code(Errc::MissingFile, [&] { load_band_stack(dir.file("ghost.txt")); }));
}

TEST_CASE("convolve identity and constant-image responses") {
  std::mt19937 rng(11);
  const GrayImage img = random_image(rng, 12, 10);
  const Kernel identity(1, 1, {1.0}, 0, 0);
  CHECK(max_abs_diff(convolve(img, identity), img) == 0.0);

  const Kernel sobel_gx(3, 3, {-1, 0, 1, -2, 0, 2, -1, 0, 1}, 1, 1);
  const GrayImage flat(9, 9, 0.5);
  const GrayImage out = convolve(flat, sobel_gx);
  for (double p : out.pixels) CHECK(p == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("convolve on the 8x8 vertical step gives 4.0 at the flanking columns") {
  const Kernel sobel_gx(3, 3, {-1, 0, 1, -2, 0, 2, -1, 0, 1}, 1, 1);
  const GrayImage out = convolve(step8(), sobel_gx, BorderPolicy::Replicate);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (c == 3 || c == 4)
        CHECK(out.at(r, c) == 4.0);
      else
        CHECK(out.at(r, c) == 0.0);
    }
}

TEST_CASE("convolve rejects kernels larger than the image") {
  const GrayImage img(4, 4, 0.0);
  const Kernel k(5, 5, std::vector<double>(25, 1.0), 2, 2);
  CHECK(throws_code(Errc::KernelLargerThanImage, [&] { convolve(img, k); }));
}

TEST_CASE("convolve is linear") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage a = random_image(rng, 16, 16);
    const GrayImage b = random_image(rng, 16, 16);
    const Kernel k = random_kernel(rng, 5);
    const double alpha = 0.7, beta = -1.3;

    GrayImage mix(16, 16);
    for (size_t i = 0; i < mix.pixels.size(); ++i)
      mix.pixels[i] = alpha * a.pixels[i] + beta * b.pixels[i];

    const GrayImage lhs = convolve(mix, k, BorderPolicy::Reflect);
    const GrayImage ca = convolve(a, k, BorderPolicy::Reflect);
    const GrayImage cb = convolve(b, k, BorderPolicy::Reflect);
    GrayImage rhs(16, 16);
    for (size_t i = 0; i < rhs.pixels.size(); ++i)
      rhs.pixels[i] = alpha * ca.pixels[i] + beta * cb.pixels[i];

    CHECK(max_abs_diff(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("convolve is bit-identical across thread caps") {
  std::mt19937 rng(59);
  const GrayImage img = random_image(rng, 192, 160);  // large enough to go parallel
  const Kernel k = gaussian_kernel(1.5);

  set_max_threads(1);
  const GrayImage sequential = convolve(img, k);
  set_max_threads(4);
  const GrayImage threaded = convolve(img, k);
  set_max_threads(0);

  CHECK(sequential.pixels == threaded.pixels);
}

TEST_CASE("convolve matches the brute-force oracle on random cases") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dim(7, 32);
  const BorderPolicy borders[] = {BorderPolicy::Replicate, BorderPolicy::Reflect,
                                  BorderPolicy::Zero};
  for (int trial = 0; trial < 60; ++trial) {
    const GrayImage img = random_image(rng, dim(rng), dim(rng));
    const Kernel k = random_kernel(rng, 7);
    const BorderPolicy border = borders[trial % 3];
    const GrayImage fast = convolve(img, k, border);
    const GrayImage slow = convolve_oracle(img, k, border);
    REQUIRE(max_abs_diff(fast, slow) < 1e-9);
  }
}

TEST_CASE("gaussian_kernel normalization, support and shape") {
  for (double sigma : {0.5, 1.0, 1.7, 3.0}) {
    const Kernel k = gaussian_kernel(sigma);
    const int half = static_cast<int>(std::ceil(3.0 * sigma));
    CHECK(k.width == 2 * half + 1);
    CHECK(k.height == k.width);
    double sum = 0.0;
    for (double t : k.taps) sum += t;
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }

  const Kernel k1 = gaussian_kernel(1.0);
  REQUIRE(k1.width == 7);
  // center over edge-center: exp(0) / exp(-9/2)
  CHECK(k1.at(3, 3) / k1.at(3, 6) == doctest::Approx(std::exp(4.5)).epsilon(1e-12));

  CHECK(throws_code(Errc::NonPositiveSigma, [] { gaussian_kernel(0.0); }));
  CHECK(throws_code(Errc::NonPositiveSigma, [] { gaussian_kernel(-1.0); }));
}

TEST_CASE("gaussian_kernel is exactly symmetric under flips") {
  const Kernel k = gaussian_kernel(1.3);
  const int n = k.width;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(k.at(i, j) == k.at(i, n - 1 - j));   // horizontal
      CHECK(k.at(i, j) == k.at(n - 1 - i, j));   // vertical
      CHECK(k.at(i, j) == k.at(j, i));           // diagonal
    }
}

TEST_CASE("synth_scene basics") {
  const GrayImage step = step8();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(step.at(r, c) == (c >= 4 ? 1.0 : 0.0));

  CHECK(throws_code(Errc::GeometryOutOfBounds,
                    [] { synth_scene(SceneSpec::disk(64, 64, 32, 32, 40)); }));

  const GrayImage rib = synth_scene(SceneSpec::ribbon(64, 64, 3, false, 0.2, 0.8));
  long hi_count = 0;
  for (double p : rib.pixels) {
    if (p == 0.8) ++hi_count;
  }
  CHECK(hi_count == 3 * 64);

  // byte-identical determinism
  const GrayImage rib2 = synth_scene(SceneSpec::ribbon(64, 64, 3, false, 0.2, 0.8));
  CHECK(rib.pixels == rib2.pixels);

  const GrayImage chk = synth_scene(SceneSpec::checker(16, 16, 4, 0.1, 0.9));
  CHECK(chk.at(0, 0) == 0.1);
  CHECK(chk.at(0, 4) == 0.9);
  CHECK(chk.at(4, 0) == 0.9);
  CHECK(chk.at(4, 4) == 0.1);
}

TEST_CASE("synth_truth marks the low side of each boundary") {
  // vstep: single column at split-1
  const EdgeMap vt = synth_truth(SceneSpec::vstep(64, 64, 32));
  for (int r = 0; r < 64; ++r)
    for (int c = 0; c < 64; ++c) CHECK(vt.at(r, c) == (c == 31));

  // ribbon rows start-1 and start+thickness
  const SceneSpec rib = SceneSpec::ribbon(16, 16, 3, false, 6, 0.0, 1.0);
  const EdgeMap rt = synth_truth(rib);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) CHECK(rt.at(r, c) == (r == 5 || r == 9));

  // disk and checker agree with brute-force boundary extraction on the image
  for (const SceneSpec& spec :
       {SceneSpec::disk(32, 32, 15, 16, 9, 0.1, 0.9), SceneSpec::checker(24, 24, 6)}) {
    const GrayImage img = synth_scene(spec);
    const EdgeMap truth = synth_truth(spec);
    for (int r = 0; r < img.height; ++r)
      for (int c = 0; c < img.width; ++c) {
        bool expect = false;
        if (img.at(r, c) == spec.lo) {
          const int dr[] = {0, 0, -1, 1}, dc[] = {-1, 1, 0, 0};
          for (int k = 0; k < 4; ++k) {
            const int rr = r + dr[k], cc = c + dc[k];
            if (rr >= 0 && rr < img.height && cc >= 0 && cc < img.width &&
                img.at(rr, cc) == spec.hi)
              expect = true;
          }
        }
        CHECK(truth.at(r, c) == expect);
      }
  }
}

TEST_CASE("normalize_minmax") {
  GrayImage img(3, 1);
  img.pixels = {2.0, 4.0, 6.0};
  const GrayImage out = normalize_minmax(img);
  CHECK(out.pixels == std::vector<double>{0.0, 0.5, 1.0});

  const GrayImage flat(5, 5, 0.7);
  for (double p : normalize_minmax(flat).pixels) CHECK(p == 0.0);

  // the step-image response {0,4} normalizes to exactly {0,1}
  const Kernel sobel_gx(3, 3, {-1, 0, 1, -2, 0, 2, -1, 0, 1}, 1, 1);
  const GrayImage norm = normalize_minmax(convolve(step8(), sobel_gx));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(norm.at(r, c) == ((c == 3 || c == 4) ? 1.0 : 0.0));
}

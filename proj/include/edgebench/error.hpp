#pragma once

#include <stdexcept>
#include <string>

namespace edgebench {

// Failure categories used across the library. The CLI prints the category
// name on stderr, so the names are part of the tool's interface.
enum class Errc {
  // raster I/O
  MalformedHeader,
  TruncatedData,
  UnsupportedMaxval,
  IoFailure,
  DimensionMismatch,
  DuplicateLabel,
  MissingFile,
  // convolution / kernels / scenes
  KernelLargerThanImage,
  NonPositiveSigma,
  GeometryOutOfBounds,
  // detectors
  ImageTooSmall,
  ThresholdOutOfRange,
  InvalidThresholdPair,
  NegativeThreshold,
  // sweep harness
  EmptyGrid,
  UnsortedGrid,
  UnfilledDensities,
  DegenerateInput,
  // band analysis / benchmarking
  EmptyStack,
  DensityOutOfRange,
  // generic precondition violation
  InvalidArgument,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

private:
  Errc code_;
};

}  // namespace edgebench

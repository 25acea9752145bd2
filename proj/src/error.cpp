#include "edgebench/error.hpp"

namespace edgebench {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::UnsupportedMaxval: return "UnsupportedMaxval";
    case Errc::IoFailure: return "IoFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::MissingFile: return "MissingFile";
    case Errc::KernelLargerThanImage: return "KernelLargerThanImage";
    case Errc::NonPositiveSigma: return "NonPositiveSigma";
    case Errc::GeometryOutOfBounds: return "GeometryOutOfBounds";
    case Errc::ImageTooSmall: return "ImageTooSmall";
    case Errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case Errc::InvalidThresholdPair: return "InvalidThresholdPair";
    case Errc::NegativeThreshold: return "NegativeThreshold";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::UnsortedGrid: return "UnsortedGrid";
    case Errc::UnfilledDensities: return "UnfilledDensities";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::EmptyStack: return "EmptyStack";
    case Errc::DensityOutOfRange: return "DensityOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace edgebench

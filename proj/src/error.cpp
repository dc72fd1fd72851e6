#include "hcl/error.hpp"

namespace hcl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SigmaOutOfRange: return "SigmaOutOfRange";
    case ErrorKind::EpsTooLarge: return "EpsTooLarge";
    case ErrorKind::NotDescendingAtNu: return "NotDescendingAtNu";
    case ErrorKind::SameIndex: return "SameIndex";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::ZeroSpectrum: return "ZeroSpectrum";
    case ErrorKind::SeparationTooSmall: return "SeparationTooSmall";
    case ErrorKind::AOutOfRange: return "AOutOfRange";
    case ErrorKind::CotangentPole: return "CotangentPole";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace hcl

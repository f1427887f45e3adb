#include "qwedge/error.hpp"

namespace qwedge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotPure: return "NotPure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace qwedge

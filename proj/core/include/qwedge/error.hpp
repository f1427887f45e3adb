#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwedge {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  TraceNotOne,
  NotPositive,
  NotNormalized,
  InvalidDistribution,
  DimensionTooSmall,
  DimensionMismatch,
  NotAntisymmetric,
  ShapeMismatch,
  NotPure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every validating operation. `what()` starts with the kind name,
/// e.g. "TraceNotOne: trace is 0.9".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qwedge

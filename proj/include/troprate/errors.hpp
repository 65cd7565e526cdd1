#pragma once

#include <stdexcept>
#include <string>

namespace troprate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (zero entry, missing
/// regularity, zero spectral radius, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The constraint Bx <= x admits no regular solution because Tr(B) > 1.
/// Carries the offending trace value (natural log and plain value).
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double trace_log)
      : Error(what), trace_log_(trace_log) {}

  double trace_log() const noexcept { return trace_log_; }
  double trace_value() const;

 private:
  double trace_log_;
};

}  // namespace troprate

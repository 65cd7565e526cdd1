#include "troprate/scalar.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "troprate/errors.hpp"

namespace troprate {

double InfeasibleError::trace_value() const { return std::exp(trace_log_); }

TropScalar TropScalar::from_value(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw PreconditionError("tropical scalar must be a finite nonnegative "
                            "number, got " + std::to_string(value));
  }
  if (value == 0.0) return TropScalar();
  return from_log(std::log(value));
}

TropScalar TropScalar::from_ratio(std::int64_t p, std::int64_t q) {
  if (q == 0) throw PreconditionError("ratio with zero denominator");
  if (p < 0 || q < 0) throw PreconditionError("ratio must be nonnegative");
  if (p == 0) return TropScalar();
  return from_log(std::log(static_cast<double>(p)) -
                  std::log(static_cast<double>(q)));
}

TropScalar TropScalar::pow(double q) const {
  if (bottom_) {
    if (q <= 0.0) throw PreconditionError("nonpositive power of zero");
    return TropScalar();
  }
  return from_log(q * log_);
}

TropScalar TropScalar::root(int k) const {
  if (k < 1) throw PreconditionError("root index must be positive");
  if (bottom_) return TropScalar();
  return from_log(log_ / static_cast<double>(k));
}

bool approx_le(TropScalar a, TropScalar b, double tol) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.log() <= b.log() + tol;
}

bool approx_eq(TropScalar a, TropScalar b, double tol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return std::abs(a.log() - b.log()) <= tol;
}

std::ostream& operator<<(std::ostream& os, TropScalar s) {
  if (s.is_zero()) return os << "0";
  return os << s.value();
}

}  // namespace troprate

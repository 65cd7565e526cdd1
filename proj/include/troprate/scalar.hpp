#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>

namespace troprate {

/// Default absolute tolerance on natural logarithms used for every
/// approximate comparison in the library.
inline constexpr double kLogTol = 1e-9;

/// Element of the max-times semifield (R_+, max, *), held as its natural
/// logarithm. The tropical zero (bottom) is a separate flag so that no
/// arithmetic ever touches an infinite or sentinel float.
class TropScalar {
 public:
  /// Bottom element.
  constexpr TropScalar() = default;

  static constexpr TropScalar zero() { return TropScalar(); }
  static constexpr TropScalar one() { return from_log(0.0); }

  static constexpr TropScalar from_log(double log_value) {
    TropScalar s;
    s.log_ = log_value;
    s.bottom_ = false;
    return s;
  }

  /// Throws PreconditionError for negative or non-finite input.
  static TropScalar from_value(double value);

  /// Exact positive rational p/q, converted as log p - log q.
  static TropScalar from_ratio(std::int64_t p, std::int64_t q);

  constexpr bool is_zero() const { return bottom_; }
  constexpr bool is_positive() const { return !bottom_; }

  /// Natural logarithm. Only meaningful when is_positive().
  constexpr double log() const { return log_; }

  /// Ordinary real value (0 for bottom).
  double value() const { return bottom_ ? 0.0 : std::exp(log_); }

  /// Multiplicative inverse with the conjugate convention 0^- = 0.
  constexpr TropScalar inverse() const {
    return bottom_ ? TropScalar() : from_log(-log_);
  }

  /// Rational power a^q, exact in the log domain. 0^q = 0 for q > 0.
  TropScalar pow(double q) const;

  /// k-th root, k >= 1.
  TropScalar root(int k) const;

  friend constexpr TropScalar operator+(TropScalar a, TropScalar b) {
    if (a.bottom_) return b;
    if (b.bottom_) return a;
    return a.log_ >= b.log_ ? a : b;
  }

  friend constexpr TropScalar operator*(TropScalar a, TropScalar b) {
    if (a.bottom_ || b.bottom_) return TropScalar();
    return from_log(a.log_ + b.log_);
  }

  /// a * b^-1; division by bottom yields bottom (conjugate convention).
  friend constexpr TropScalar operator/(TropScalar a, TropScalar b) {
    return a * b.inverse();
  }

  TropScalar& operator+=(TropScalar o) { return *this = *this + o; }
  TropScalar& operator*=(TropScalar o) { return *this = *this * o; }

  friend constexpr bool operator==(TropScalar a, TropScalar b) {
    if (a.bottom_ || b.bottom_) return a.bottom_ == b.bottom_;
    return a.log_ == b.log_;
  }

  friend constexpr std::partial_ordering operator<=>(TropScalar a,
                                                     TropScalar b) {
    if (a.bottom_ && b.bottom_) return std::partial_ordering::equivalent;
    if (a.bottom_) return std::partial_ordering::less;
    if (b.bottom_) return std::partial_ordering::greater;
    return a.log_ <=> b.log_;
  }

 private:
  double log_ = 0.0;
  bool bottom_ = true;
};

/// a <= b up to `tol` on logarithms; bottom is below everything.
bool approx_le(TropScalar a, TropScalar b, double tol = kLogTol);

/// a == b up to `tol` on logarithms; bottoms only match bottoms.
bool approx_eq(TropScalar a, TropScalar b, double tol = kLogTol);

std::ostream& operator<<(std::ostream& os, TropScalar s);

}  // namespace troprate

#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace kummer {

/// Owning wrapper around an MPFR number. Every value carries its own binary
/// precision; binary operations produce a result at the larger of the two
/// operand precisions and round to nearest.
///
/// Invalid operations (division by zero, logarithm of a non-positive value,
/// any result that would be NaN or infinite) throw DomainError instead of
/// producing a special value.
class Real {
 public:
  using Bits = mpfr_prec_t;

  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Exact conversion of a binary double (used for tolerances only).
  static Real from_double(double value, Bits bits);
  /// 10^exponent, correctly rounded.
  static Real pow10(long exponent, Bits bits);
  static Real pi(Bits bits);
  static Real ln2(Bits bits);

  Bits precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  /// Copy of this value rounded to a different precision.
  Real rounded(Bits bits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Nearest integer, ties away from zero. Throws DomainError if out of range.
  long nearest_long() const;
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; LONG_MIN for zero.
  long exponent2() const noexcept;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;
  friend bool operator==(const Real& a, long b) noexcept { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) noexcept;

 private:
  void ensure_init(Bits bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);

/// Scientific rendering with `digits` significant decimal digits, trailing
/// zeros trimmed: "-1.25e-3", "0.0", "7.0". Deterministic for a given value.
std::string to_decimal(const Real& x, int digits);

}  // namespace kummer

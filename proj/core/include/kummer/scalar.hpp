#pragma once

#include <string>
#include <string_view>

#include "kummer/context.hpp"
#include "kummer/real.hpp"

namespace kummer {

/// Complex number with MPFR components. All series arithmetic flows through
/// this type, including the real-parameter cases.
class Scalar {
 public:
  explicit Scalar(Real::Bits bits) : re_(bits), im_(bits) {}
  explicit Scalar(Real re) : re_(std::move(re)), im_(re_.precision()) {}
  Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(long value, Real::Bits bits) : re_(value, bits), im_(bits) {}

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real::Bits precision() const noexcept {
    return re_.precision() > im_.precision() ? re_.precision() : im_.precision();
  }

  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar& operator*=(const Real& rhs);
  Scalar& operator/=(const Real& rhs);
  Scalar& operator*=(long rhs);
  Scalar& operator/=(long rhs);
  Scalar& operator+=(long rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const Real& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Real& b) { return a /= b; }
  friend Scalar operator*(Scalar a, long b) { return a *= b; }
  friend Scalar operator/(Scalar a, long b) { return a /= b; }
  friend Scalar operator+(Scalar a, long b) { return a += b; }
  friend Scalar operator-(Scalar a, long b) { return a += -b; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
};

Real abs(const Scalar& z);
Scalar conj(const Scalar& z);
Scalar exp(const Scalar& z);
/// Principal branch.
Scalar log(const Scalar& z);
Scalar sin(const Scalar& z);
/// z^n by repeated squaring; z^0 = 1.
Scalar pow(const Scalar& z, long n);
/// base^z on the principal branch, base > 0.
Scalar pow(const Real& base, const Scalar& z);

/// Parses the scalar text grammar
///   [+-]D+[.D*][e[+-]D+] ( [+-] D+[.D*][e[+-]D+] i )?
/// plus the pure-imaginary shorthand "2i" / "-0.5i". Components are
/// correctly rounded to the context's working precision.
/// Throws ParseError on malformed text.
Scalar parse_scalar(std::string_view text, const PrecisionContext& ctx);

/// Renders `z` with `digits` significant digits per component in the same
/// grammar parse_scalar accepts ("1.5", "-0.25+3.0i", "1.2e-45-7.0i").
std::string to_string(const Scalar& z, int digits);

/// |a - b| <= rel_tol * (1 + max(|a|, |b|)).
bool approx_equal(const Scalar& a, const Scalar& b, const Real& rel_tol);

}  // namespace kummer

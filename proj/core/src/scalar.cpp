#include "kummer/scalar.hpp"

#include <cctype>
#include <optional>

#include "kummer/errors.hpp"

namespace kummer {

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.is_real()) return *this *= rhs.re_;
  if (is_real()) {
    Real r = re_;
    re_ = r * rhs.re_;
    im_ = r * rhs.im_;
    return *this;
  }
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_real()) return *this /= rhs.re_;
  if (rhs.is_zero()) throw DomainError("division by zero");
  const Real denom = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  Real im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Scalar& Scalar::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Scalar& Scalar::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Scalar& Scalar::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Scalar& Scalar::operator+=(long rhs) {
  re_ += Real(rhs, re_.precision());
  return *this;
}

Real abs(const Scalar& z) {
  if (z.is_real()) return abs(z.re());
  return hypot(z.re(), z.im());
}

Scalar conj(const Scalar& z) { return Scalar(z.re(), -z.im()); }

Scalar exp(const Scalar& z) {
  if (z.is_real()) return Scalar(exp(z.re()));
  const Real m = exp(z.re());
  return Scalar(m * cos(z.im()), m * sin(z.im()));
}

Scalar log(const Scalar& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  if (z.is_real() && z.re().sign() > 0) return Scalar(log(z.re()));
  return Scalar(log(abs(z)), atan2(z.im(), z.re()));
}

Scalar sin(const Scalar& z) {
  if (z.is_real()) return Scalar(sin(z.re()));
  return Scalar(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

Scalar pow(const Scalar& z, long n) {
  if (n < 0) return Scalar(1, z.precision()) / pow(z, -n);
  Scalar result(1, z.precision());
  Scalar base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar pow(const Real& base, const Scalar& z) {
  return exp(z * log(base));
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  size_t digits() {
    const size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos - start;
  }
};

// Consumes one unsigned decimal literal; returns it as a string for mpfr.
std::optional<std::string> unsigned_number(Cursor& c) {
  const size_t start = c.pos;
  if (c.digits() == 0) return std::nullopt;
  if (c.accept('.')) c.digits();
  if (c.peek() == 'e' || c.peek() == 'E') {
    const size_t save = c.pos;
    ++c.pos;
    if (!c.accept('-')) c.accept('+');
    if (c.digits() == 0) c.pos = save;
  }
  return std::string(c.text.substr(start, c.pos - start));
}

Real to_real(const std::string& literal, bool negative, Real::Bits bits) {
  Real out(bits);
  if (mpfr_set_str(out.get(), literal.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed number '" + literal + "'");
  }
  return negative ? -out : out;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const PrecisionContext& ctx) {
  const auto fail = [&]() -> ParseError {
    return ParseError("malformed scalar '" + std::string(text) + "'");
  };
  const Real::Bits bits = ctx.working_bits();
  Cursor c{text};

  bool negative = false;
  if (c.accept('-')) {
    negative = true;
  } else {
    c.accept('+');
  }
  const auto first = unsigned_number(c);
  if (!first) throw fail();
  Real head = to_real(*first, negative, bits);

  if (c.done()) return Scalar(std::move(head));
  if (c.accept('i')) {
    if (!c.done()) throw fail();
    return Scalar(Real(bits), std::move(head));
  }

  bool im_negative = false;
  if (c.accept('-')) {
    im_negative = true;
  } else if (!c.accept('+')) {
    throw fail();
  }
  const auto second = unsigned_number(c);
  if (!second || !c.accept('i') || !c.done()) throw fail();
  return Scalar(std::move(head), to_real(*second, im_negative, bits));
}

std::string to_string(const Scalar& z, int digits) {
  std::string out = to_decimal(z.re(), digits);
  if (!z.im().is_zero()) {
    std::string im = to_decimal(z.im(), digits);
    if (im.front() != '-') im.insert(im.begin(), '+');
    out += im + "i";
  }
  return out;
}

bool approx_equal(const Scalar& a, const Scalar& b, const Real& rel_tol) {
  const Real scale = max(abs(a), abs(b));
  return abs(a - b) <= rel_tol * (scale + Real(1, scale.precision()));
}

}  // namespace kummer

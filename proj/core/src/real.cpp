#include "kummer/real.hpp"

#include <climits>
#include <cstring>
#include <utility>

#include "kummer/errors.hpp"

namespace kummer {
namespace {

Real::Bits wider(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

void require_finite(const Real& x, const char* op) {
  if (!mpfr_number_p(x.get())) {
    throw DomainError(std::string("non-finite result in ") + op);
  }
}

template <class F>
Real unary(const Real& x, const char* op, F&& f) {
  Real out(x.precision());
  f(out.get(), x.get(), MPFR_RNDN);
  require_finite(out, op);
  return out;
}

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    ensure_init(other.precision());
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_t tmp;
    std::memcpy(tmp, value_, sizeof(mpfr_t));
    std::memcpy(value_, other.value_, sizeof(mpfr_t));
    std::memcpy(other.value_, tmp, sizeof(mpfr_t));
  }
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

void Real::ensure_init(Bits bits) {
  if (value_->_mpfr_d == nullptr) mpfr_init2(value_, bits);
}

Real Real::from_double(double value, Bits bits) {
  Real out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  require_finite(out, "from_double");
  return out;
}

Real Real::pow10(long exponent, Bits bits) {
  Real out(bits);
  mpfr_set_si(out.value_, 10, MPFR_RNDN);
  mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

Real Real::pi(Bits bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::ln2(Bits bits) {
  Real out(bits);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

Real Real::rounded(Bits bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long Real::nearest_long() const {
  Real r(precision());
  mpfr_round(r.value_, value_);
  if (!mpfr_fits_slong_p(r.value_, MPFR_RNDZ)) {
    throw DomainError("value does not fit in a machine integer");
  }
  return mpfr_get_si(r.value_, MPFR_RNDZ);
}

long Real::exponent2() const noexcept {
  if (mpfr_zero_p(value_)) return LONG_MIN;
  return mpfr_get_exp(value_);
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) noexcept {
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary(x, "abs", mpfr_abs); }
Real exp(const Real& x) { return unary(x, "exp", mpfr_exp); }
Real sin(const Real& x) { return unary(x, "sin", mpfr_sin); }
Real cos(const Real& x) { return unary(x, "cos", mpfr_cos); }
Real sinh(const Real& x) { return unary(x, "sinh", mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, "cosh", mpfr_cosh); }

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  return unary(x, "sqrt", mpfr_sqrt);
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  return unary(x, "log", mpfr_log);
}

Real atan2(const Real& y, const Real& x) {
  Real out(wider(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(wider(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::string to_decimal(const Real& x, int digits) {
  if (x.is_zero()) return "0.0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.get(), MPFR_RNDN);
  std::string d(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!d.empty() && d.front() == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  while (d.size() > 1 && d.back() == '0') d.pop_back();

  // value = 0.d1d2d3... * 10^e
  const long len = static_cast<long>(d.size());
  std::string out;
  if (e > 21 || e < -4) {
    out = d.substr(0, 1) + "." + (len > 1 ? d.substr(1) : std::string("0")) + "e" +
          std::to_string(static_cast<long>(e) - 1);
  } else if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else if (e < len) {
    out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
  } else {
    out = d + std::string(static_cast<size_t>(e - len), '0') + ".0";
  }
  return sign + out;
}

}  // namespace kummer

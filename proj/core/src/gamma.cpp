#include "kummer/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer {
namespace {

// Extra bits carried through the gamma kernel. exp() of a log-gamma of
// size ~R log R loses about log2(R log R) bits of relative accuracy, and
// the shift product adds a few more.
constexpr Real::Bits kGammaGuardBits = 64;
constexpr long kFastPathLimit = 10000;

// Coefficients of the Stirling series
//   log Gamma(w) ~ (w - 1/2) log w - w + log(2 pi)/2 + sum_k c_k / w^(2k-1),
//   c_k = B_2k / (2k (2k - 1)) = (-1)^(k+1) 2 (2k-2)! zeta(2k) / (2 pi)^(2k).
// The argument is shifted up to |w| >= shift_radius before the series is
// used; the truncation error after K terms is then far below 2^-bits long
// before the asymptotic terms start growing (at k ~ pi * shift_radius).
struct StirlingTable {
  Real::Bits bits;
  long shift_radius;
  std::vector<Real> coeffs;
  Real half_log_2pi;
};

std::shared_ptr<const StirlingTable> build_table(Real::Bits bits) {
  const Real::Bits extra = bits + 32;
  auto table = std::make_shared<StirlingTable>(StirlingTable{
      bits, static_cast<long>(std::ceil(0.17 * static_cast<double>(bits))) + 8, {}, Real(bits)});

  const Real two_pi = Real::pi(extra) * 2L;
  table->half_log_2pi = (log(two_pi) / 2L).rounded(bits);

  const long max_k = static_cast<long>(std::ceil(M_PI * static_cast<double>(table->shift_radius))) + 4;
  table->coeffs.reserve(static_cast<size_t>(max_k));
  Real zeta(extra), fact(extra), power(extra);
  for (long k = 1; k <= max_k; ++k) {
    mpfr_zeta_ui(zeta.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_fac_ui(fact.get(), static_cast<unsigned long>(2 * k - 2), MPFR_RNDN);
    mpfr_pow_ui(power.get(), two_pi.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    Real c = zeta * fact * 2L / power;
    if (k % 2 == 0) c = -c;
    table->coeffs.push_back(c.rounded(bits));
  }
  return table;
}

std::shared_ptr<const StirlingTable> stirling_table(Real::Bits bits) {
  static std::mutex mutex;
  static std::map<Real::Bits, std::shared_ptr<const StirlingTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[bits];
  if (!slot) slot = build_table(bits);
  return slot;
}

// Asymptotic log Gamma(w) for |w| >= shift_radius. T is Real or Scalar.
template <class T>
T stirling_log_gamma(const T& w, const StirlingTable& table) {
  const Real::Bits bits = table.bits;
  const T half = T(1, bits) / 2L;
  T result = (w - half) * log(w) - w + T(table.half_log_2pi);

  const T inv = T(1, bits) / w;
  const T inv2 = inv * inv;
  T power = inv;
  for (const Real& c : table.coeffs) {
    T term = power * c;
    if (abs(term).exponent2() < -static_cast<long>(bits)) break;
    result = result + term;
    power = power * inv2;
  }
  return result;
}

long shift_count(const Real& re, long radius) {
  if (re >= radius) return 0;
  return radius - static_cast<long>(std::floor(re.to_double()));
}

// Reflection below 1/2, otherwise exp(log Gamma(x + N)) / (x (x+1) ... (x+N-1)).
Real gamma_real(const Real& x, const StirlingTable& table) {
  const Real::Bits bits = table.bits;
  const Real half = Real(1, bits) / 2L;
  if (x < half) {
    const Real pi = Real::pi(bits);
    return pi / (sin(pi * x) * gamma_real(Real(1, bits) - x, table));
  }
  const long n = shift_count(x, table.shift_radius);
  Real product(1, bits);
  Real w = x;
  for (long k = 0; k < n; ++k) {
    product *= w;
    w += Real(1, bits);
  }
  return exp(stirling_log_gamma(w, table)) / product;
}

Scalar gamma_complex(const Scalar& z, const StirlingTable& table) {
  const Real::Bits bits = table.bits;
  const Real half = Real(1, bits) / 2L;
  if (z.re() < half) {
    const Real pi = Real::pi(bits);
    const Scalar reflected = Scalar(1, bits) - z;
    return Scalar(pi) / (sin(z * pi) * gamma_complex(reflected, table));
  }
  const long n = shift_count(z.re(), table.shift_radius);
  Scalar product(1, bits);
  Scalar w = z;
  for (long k = 0; k < n; ++k) {
    product *= w;
    w += 1L;
  }
  return exp(stirling_log_gamma(w, table)) / product;
}

// Exact-argument fast paths: Gamma(n) = (n-1)!, Gamma(n + 1/2) = sqrt(pi) (1/2)_n.
std::optional<Real> gamma_fast_path(const Real& x, Real::Bits bits) {
  if (abs(x) > kFastPathLimit) return std::nullopt;
  if (x.is_integer()) {
    const long n = x.nearest_long();
    if (n < 1) return std::nullopt;
    Real out(bits);
    mpfr_fac_ui(out.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
    return out;
  }
  const Real twice = x * 2L;
  if (!twice.is_integer()) return std::nullopt;
  const long n = ((x - Real(1, bits) / 2L)).nearest_long();
  Real sqrt_pi = sqrt(Real::pi(bits));
  Real product(1, bits);
  const Real half = Real(1, bits) / 2L;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) product *= half + Real(k, bits);
    return sqrt_pi * product;
  }
  for (long k = 1; k <= -n; ++k) product *= half - Real(k, bits);
  return sqrt_pi / product;
}

}  // namespace

std::optional<long> nearest_pole(const Scalar& z, const PrecisionContext& ctx) {
  const Real& tol = ctx.pole_tolerance();
  if (abs(z.im()) > tol) return std::nullopt;
  if (z.re() > tol) return std::nullopt;
  const long n = z.re().nearest_long();
  if (n > 0) return std::nullopt;
  if (abs(z - Scalar(n, z.precision())) <= tol) return n;
  return std::nullopt;
}

Scalar gamma(const Scalar& z, const PrecisionContext& ctx) {
  if (const auto pole = nearest_pole(z, ctx)) {
    throw PoleError(*pole, "gamma pole at " + std::to_string(*pole));
  }
  const Real::Bits out_bits = ctx.working_bits();
  const Real::Bits bits = out_bits + kGammaGuardBits;
  if (z.is_real()) {
    const Real x = z.re().rounded(bits);
    if (auto fast = gamma_fast_path(x, bits)) return Scalar(fast->rounded(out_bits));
    const auto table = stirling_table(bits);
    return Scalar(gamma_real(x, *table).rounded(out_bits));
  }
  const auto table = stirling_table(bits);
  const Scalar g = gamma_complex(Scalar(z.re().rounded(bits), z.im().rounded(bits)), *table);
  return Scalar(g.re().rounded(out_bits), g.im().rounded(out_bits));
}

Scalar log_gamma(const Scalar& z, const PrecisionContext& ctx) {
  if (!(z.re() > 0L)) throw DomainError("log_gamma requires Re z > 0");
  const Real::Bits out_bits = ctx.working_bits();
  const Real::Bits bits = out_bits + kGammaGuardBits;
  const auto table = stirling_table(bits);
  Scalar w(z.re().rounded(bits), z.im().rounded(bits));
  const long n = shift_count(w.re(), table->shift_radius);
  Scalar shift_logs(bits);
  for (long k = 0; k < n; ++k) {
    shift_logs += log(w);
    w += 1L;
  }
  const Scalar lg = z.is_real() ? Scalar(stirling_log_gamma(w.re(), *table)) - shift_logs
                                : stirling_log_gamma(w, *table) - shift_logs;
  return Scalar(lg.re().rounded(out_bits), lg.im().rounded(out_bits));
}

Scalar rgamma(const Scalar& z, const PrecisionContext& ctx) {
  if (nearest_pole(z, ctx)) return Scalar(ctx.working_bits());
  return Scalar(1, ctx.working_bits()) / gamma(z, ctx);
}

Scalar pochhammer(const Scalar& a, long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("pochhammer length must be nonnegative");
  const Real::Bits bits = ctx.working_bits();
  Scalar product(1, bits);
  Scalar factor = a;
  for (long k = 0; k < n; ++k) {
    product *= factor;
    factor += 1L;
  }
  return product;
}

Scalar gamma_ratio_shift(const Scalar& z, long i, const PrecisionContext& ctx) {
  if (i < 0) throw DomainError("gamma_ratio_shift requires i >= 0");
  const Real::Bits bits = ctx.working_bits();
  Scalar product(1, bits);
  for (long k = 1; k <= i; ++k) {
    const Scalar factor = z - k;
    if (abs(factor) <= ctx.pole_tolerance()) {
      throw RatioPoleError("Gamma(z-" + std::to_string(i) + ")/Gamma(z): factor z-" +
                           std::to_string(k) + " vanishes");
    }
    product *= factor;
  }
  return Scalar(1, bits) / product;
}

Scalar gamma_half_ratio(const Scalar& a, long r, const PrecisionContext& ctx) {
  if (r < 0) throw DomainError("gamma_half_ratio requires r >= 0");
  const Real half = ctx.real(1) / 2L;
  const Scalar a_half = a + Scalar(half);
  if (r % 2 == 0) return pochhammer(a, r / 2, ctx) * rgamma(a_half, ctx);
  return pochhammer(a_half, r / 2, ctx) * rgamma(a, ctx);
}

std::uint64_t binomial(long i, long r) {
  if (i < 0 || r < 0) throw DomainError("binomial arguments must be nonnegative");
  if (r > i) {
    throw DomainError("binomial(" + std::to_string(i) + ", " + std::to_string(r) +
                      "): r exceeds i");
  }
  if (r > i - r) r = i - r;
  std::uint64_t c = 1;
  for (long k = 0; k < r; ++k) {
    std::uint64_t next = 0;
    // c * (i - k) is divisible by (k + 1) because c = C(i, k).
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(i - k), &next)) {
      throw DomainError("binomial coefficient overflows 64 bits");
    }
    c = next / static_cast<std::uint64_t>(k + 1);
  }
  return c;
}

}  // namespace kummer

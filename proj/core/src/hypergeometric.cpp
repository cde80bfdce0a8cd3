#include "kummer/hypergeometric.hpp"

#include <optional>
#include <string>

#include "kummer/errors.hpp"
#include "kummer/gamma.hpp"
#include "series_monitor.hpp"

namespace kummer {
namespace {

// Smallest m such that some upper parameter equals -m.
std::optional<long> termination_index(const std::vector<Scalar>& upper,
                                      const PrecisionContext& ctx) {
  std::optional<long> m;
  for (const Scalar& a : upper) {
    if (const auto pole = nearest_pole(a, ctx)) {
      if (!m || -*pole < *m) m = -*pole;
    }
  }
  return m;
}

void check_lower(const std::vector<Scalar>& lower, std::optional<long> terminate_at,
                 const PrecisionContext& ctx) {
  for (const Scalar& b : lower) {
    const auto pole = nearest_pole(b, ctx);
    if (!pole) continue;
    const long k = -*pole;
    // (b)_n stays nonzero for n <= k; the sum needs (b)_n up to n = m.
    if (!terminate_at || *terminate_at > k) {
      throw DomainPoleError("lower parameter " + std::to_string(*pole) +
                            " makes a Pochhammer denominator vanish");
    }
  }
}

}  // namespace

SeriesResult pfq(const HyperParams& params, const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  const auto terminate_at = termination_index(params.upper, ctx);
  check_lower(params.lower, terminate_at, ctx);

  if (params.x.is_zero()) {
    return SeriesResult{Scalar(1, bits), 1, Real(bits), true};
  }

  detail::SeriesMonitor monitor(ctx);
  Scalar sum(bits);
  Scalar term(1, bits);
  for (long n = 0;; ++n) {
    sum += term;
    if (terminate_at && n == *terminate_at) {
      return SeriesResult{std::move(sum), n + 1, Real(bits), true};
    }
    if (monitor.record(n, abs(term), abs(sum))) {
      return SeriesResult{std::move(sum), n + 1, monitor.tail_estimate(), false};
    }
    if (n + 1 >= ctx.max_terms()) {
      if (monitor.non_decreasing()) {
        throw DivergenceError("pFq: terms stopped decreasing after " +
                              std::to_string(ctx.max_terms()) + " terms");
      }
      return SeriesResult{std::move(sum), n + 1, monitor.tail_estimate(), false};
    }

    const Scalar shift(n, bits);
    for (const Scalar& a : params.upper) term *= a + shift;
    Scalar denom(n + 1, bits);
    for (const Scalar& b : params.lower) denom *= b + shift;
    term *= params.x;
    term /= denom;
  }
}

Scalar f21_terminating(long m, const Scalar& b, const Scalar& c, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("f21_terminating requires m >= 0");
  const Real::Bits bits = ctx.working_bits();
  for (long k = 0; k < m; ++k) {
    if (abs(c + k) <= ctx.pole_tolerance()) {
      throw DomainPoleError("(c)_n vanishes: c + " + std::to_string(k) + " = 0");
    }
  }
  // Term n: (-m)_n (b)_n (-1)^n / ((c)_n n!), built from running products.
  Scalar sum(1, bits);
  Scalar numer(1, bits);
  Scalar denom(1, bits);
  for (long n = 1; n <= m; ++n) {
    numer *= Scalar(-(-m + n - 1), bits) * (b + (n - 1));
    denom *= (c + (n - 1)) * n;
    sum += numer / denom;
  }
  return sum;
}

SeriesResult hyp2f1_minus_one(const Scalar& a, const Scalar& b, const Scalar& c,
                              const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  if (nearest_pole(a, ctx) || nearest_pole(b, ctx)) {
    return pfq(HyperParams{{a, b}, {c}, Scalar(-1, bits)}, ctx);
  }
  const Scalar half(ctx.real(1) / 2L);
  SeriesResult r = pfq(HyperParams{{a, c - b}, {c}, half}, ctx);
  const Scalar scale = pow(ctx.real(2), -a);
  r.value *= scale;
  r.tail_estimate *= abs(scale);
  return r;
}

}  // namespace kummer

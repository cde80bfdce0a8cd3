#include "kummer/summation.hpp"

#include "closed_form.hpp"
#include "kummer/errors.hpp"
#include "kummer/gamma.hpp"

namespace kummer {
namespace detail {

Scalar gamma_factor(const Scalar& z, const std::string& name, const PrecisionContext& ctx) {
  try {
    return gamma(z, ctx);
  } catch (const PoleError& e) {
    throw PoleError(e.nearest_pole(),
                    "pole in " + name + " (argument " + std::to_string(e.nearest_pole()) + ")");
  }
}

Scalar plus_halves(const Scalar& c, long halves, const PrecisionContext& ctx) {
  return c + Scalar(ctx.real(halves) / 2L);
}

Scalar paired_binomial_sum(const Scalar& A, const Scalar& D, long i, bool alternating,
                           const PrecisionContext& ctx) {
  HalfStepRgamma recip_d(D, ctx);
  return paired_binomial_sum(A, rgamma(A, ctx), rgamma(plus_halves(A, 1, ctx), ctx), i,
                             alternating, recip_d, ctx);
}

Scalar literal_binomial_sum(const Scalar& N, const Scalar& D, long i, bool alternating,
                            const PrecisionContext& ctx) {
  Scalar sum(ctx.working_bits());
  for (long r = 0; r <= i; ++r) {
    const Scalar recip = rgamma(plus_halves(D, r, ctx), ctx);
    if (recip.is_zero()) continue;
    Scalar term = gamma_factor(plus_halves(N, r, ctx), "r-sum numerator gamma", ctx) * recip;
    term *= static_cast<long>(binomial(i, r));
    if (alternating && r % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace detail

namespace {

Scalar half_of(const Scalar& z) { return z / 2L; }

Scalar two_to_minus(const Scalar& a, const PrecisionContext& ctx) {
  return pow(ctx.real(2), -a);
}

Scalar sqrt_pi(const PrecisionContext& ctx) {
  return Scalar(sqrt(Real::pi(ctx.working_bits())));
}

void require_shift(long i) {
  if (i < 0) throw DomainError("the shift i must be a nonnegative integer");
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::AsPrinted ? "as-printed" : "corrected";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "as-printed") return Mode::AsPrinted;
  if (text == "corrected") return Mode::Corrected;
  return std::nullopt;
}

Scalar kummer_classical(const Scalar& a, const Scalar& b, const PrecisionContext& ctx) {
  const Scalar half_a = half_of(a);
  const Scalar num1 = detail::gamma_factor(half_a + 1L, "Gamma(1+a/2)", ctx);
  const Scalar num2 = detail::gamma_factor(a - b + 1L, "Gamma(1+a-b)", ctx);
  return num1 * num2 * rgamma(a + 1L, ctx) * rgamma(half_a - b + 1L, ctx);
}

Scalar kummer_general_plus(const KummerInput& in, const PrecisionContext& ctx) {
  require_shift(in.i);
  using detail::plus_halves;
  const Scalar& a = in.a;
  const Scalar& b = in.b;
  const long i = in.i;
  const Scalar half_a = half_of(a);

  Scalar value = two_to_minus(a, ctx) * sqrt_pi(ctx);
  value *= gamma_ratio_shift(b, i, ctx);
  value *= detail::gamma_factor(a - b + (1 + i), "Gamma(1+a-b+i)", ctx);
  // A = a/2 - b + i/2 + 1/2, D = a/2 - i/2 + 1/2
  const Scalar A = plus_halves(half_a - b, i + 1, ctx);
  const Scalar D = plus_halves(half_a, 1 - i, ctx);
  return value * detail::paired_binomial_sum(A, D, i, true, ctx);
}

Scalar kummer_general_minus(const KummerInput& in, const PrecisionContext& ctx) {
  require_shift(in.i);
  using detail::plus_halves;
  const Scalar& a = in.a;
  const Scalar& b = in.b;
  const long i = in.i;
  const Scalar half_a = half_of(a);
  const Scalar D = plus_halves(half_a, 1 - i, ctx);
  // A = a/2 - b - i/2 + 1/2
  const Scalar A = plus_halves(half_a - b, 1 - i, ctx);

  Scalar value = two_to_minus(a, ctx) * sqrt_pi(ctx);
  if (in.mode == Mode::Corrected) {
    value *= detail::gamma_factor(a - b + (1 - i), "Gamma(1+a-b-i)", ctx);
    return value * detail::paired_binomial_sum(A, D, i, false, ctx);
  }
  value *= detail::gamma_factor(a - b + (1 + i), "Gamma(1+a-b+i)", ctx);
  value *= rgamma(plus_halves(half_a - b, i + 1, ctx), ctx);
  value *= rgamma(plus_halves(half_a - b, i + 2, ctx), ctx);
  return value * detail::literal_binomial_sum(A, D, i, false, ctx);
}

}  // namespace kummer

#include "kummer/identity.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "closed_form.hpp"
#include "kummer/errors.hpp"
#include "kummer/gamma.hpp"
#include "series_monitor.hpp"

namespace kummer {
namespace {

using detail::HalfStepRgamma;
using detail::gamma_factor;
using detail::plus_halves;

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kTheoremNames{{
    {Theorem::T21, "T21"},
    {Theorem::T22, "T22"},
    {Theorem::T23, "T23"},
    {Theorem::T24, "T24"},
    {Theorem::C31, "C31"},
    {Theorem::C32, "C32"},
    {Theorem::B11, "B11"},
    {Theorem::B12, "B12"},
}};

bool is_shift_theorem(Theorem t) {
  return t == Theorem::T21 || t == Theorem::T22 || t == Theorem::T23 || t == Theorem::T24;
}

Scalar sqrt_pi(const PrecisionContext& ctx) {
  return Scalar(sqrt(Real::pi(ctx.working_bits())));
}

void require_no_pole(const Scalar& z, const char* name, const PrecisionContext& ctx) {
  if (const auto pole = nearest_pole(z, ctx)) {
    throw DomainError(std::string(name) + " is the nonpositive integer " + std::to_string(*pole) +
                      "; a Pochhammer denominator vanishes");
  }
}

// Terms u_m = 1/((rho)_m m!) and v_n = (-1)^n/((sigma)_n n!), grown on demand.
class DoubleSeriesFactors {
 public:
  DoubleSeriesFactors(Scalar rho, Scalar sigma, const IdentityCase& c, const PrecisionContext& ctx)
      : rho_(std::move(rho)), sigma_(std::move(sigma)), case_(c), ctx_(ctx),
        xpow_(1, ctx.working_bits()) {}

  const Scalar& u(long m) { extend(m); return u_[static_cast<size_t>(m)]; }
  const Scalar& v(long n) { extend(n); return v_[static_cast<size_t>(n)]; }

  // Delta_N x^N.
  const Scalar& weight(long n) {
    while (static_cast<long>(weight_.size()) <= n) {
      const long k = static_cast<long>(weight_.size());
      weight_.push_back(case_.delta.at(k, ctx_) * xpow_);
      xpow_ *= case_.x;
    }
    return weight_[static_cast<size_t>(n)];
  }

 private:
  void extend(long n) {
    const Real::Bits bits = ctx_.working_bits();
    while (static_cast<long>(u_.size()) <= n) {
      const long k = static_cast<long>(u_.size());
      if (k == 0) {
        u_.emplace_back(1, bits);
        v_.emplace_back(1, bits);
        continue;
      }
      u_.push_back(u_.back() / ((rho_ + (k - 1)) * k));
      v_.push_back(-(v_.back() / ((sigma_ + (k - 1)) * k)));
    }
  }

  Scalar rho_;
  Scalar sigma_;
  const IdentityCase& case_;
  const PrecisionContext& ctx_;
  Scalar xpow_;
  std::vector<Scalar> u_;
  std::vector<Scalar> v_;
  std::vector<Scalar> weight_;
};

VerificationReport blank_report(const IdentityCase& c, const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  return VerificationReport{c,         Scalar(bits), Scalar(bits), Real(bits), Real(bits),
                            Real(bits), Real(bits),  0,            0,          Verdict::Fail,
                            {},        {},           std::nullopt};
}

void classify(VerificationReport& report, const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  report.abs_error = abs(report.lhs - report.rhs);
  report.rel_error = relative_error(report.lhs, report.rhs);
  const Real tol = verification_tolerance(ctx);
  const Real scale = max(Real(1, bits), max(abs(report.lhs), abs(report.rhs)));
  const Real tail_limit = tol / 10L * scale;
  if (report.lhs_tail > tail_limit || report.rhs_tail > tail_limit) {
    report.verdict = Verdict::Inconclusive;
    report.diagnostic = "truncation tail exceeds tolerance/10";
  } else {
    report.verdict = report.rel_error <= tol ? Verdict::Pass : Verdict::Fail;
  }
}

// Sum of two series results, the second weighted by `factor`.
SeriesResult combine(SeriesResult first, const SeriesResult& second, const Scalar& factor) {
  first.value += factor * second.value;
  first.tail_estimate += abs(factor) * second.tail_estimate;
  first.terms_used = std::max(first.terms_used, second.terms_used);
  first.terminated = first.terminated && second.terminated;
  return first;
}

// sum_m Delta_{k(m)} (-x^2/4)^m / ((l1)_m (l2)_m (l3)_m m!).
template <class DeltaIndex>
SeriesResult quarter_square_series(const std::array<Scalar, 3>& lower, const Scalar& x,
                                   const DeltaSequence& delta, DeltaIndex&& delta_index,
                                   const PrecisionContext& ctx, std::vector<Scalar>* terms) {
  for (const Scalar& l : lower) require_no_pole(l, "a lower parameter", ctx);
  const Scalar z = -(x * x) / 4L;
  Scalar coeff(1, ctx.working_bits());
  return detail::sum_series(
      ctx,
      [&](long m) {
        if (m > 0) {
          Scalar denom = (lower[0] + (m - 1)) * (lower[1] + (m - 1));
          denom *= lower[2] + (m - 1);
          denom *= m;
          coeff *= z / denom;
        }
        return delta.at(delta_index(m), ctx) * coeff;
      },
      terms, "corollary series");
}

}  // namespace

std::string_view to_string(Theorem theorem) {
  for (const auto& [t, name] : kTheoremNames) {
    if (t == theorem) return name;
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view text) {
  for (const auto& [t, name] : kTheoremNames) {
    if (name == text) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::DomainError: return "domain_error";
  }
  return "?";
}

IdentityCase normalized(IdentityCase c) {
  switch (c.theorem) {
    case Theorem::C31:
    case Theorem::C32:
      c.i = 0;
      break;
    case Theorem::B11:
    case Theorem::B12:
      c.i = 0;
      c.delta = DeltaSequence::constant(Scalar(1, c.rho.precision()));
      break;
    default:
      break;
  }
  return c;
}

Scalar second_lower_parameter(const IdentityCase& c, const PrecisionContext& ctx) {
  const Scalar two(2, ctx.working_bits());
  switch (c.theorem) {
    case Theorem::T21: return c.rho + c.i;
    case Theorem::T22: return c.rho - c.i;
    case Theorem::T23: return two - c.rho + c.i;
    case Theorem::T24: return two - c.rho - c.i;
    case Theorem::C31:
    case Theorem::B11: return c.rho;
    case Theorem::C32:
    case Theorem::B12: return two - c.rho;
  }
  return c.rho;
}

void validate(const IdentityCase& c, const PrecisionContext& ctx) {
  if (c.i < 0) throw DomainError("the shift i must be a nonnegative integer");
  require_no_pole(c.rho, "rho", ctx);
  require_no_pole(second_lower_parameter(c, ctx), "the second lower parameter", ctx);
}

Real verification_tolerance(const PrecisionContext& ctx) {
  return ctx.pow10(-(ctx.digits() - 15));
}

Real relative_error(const Scalar& a, const Scalar& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(scale.precision());
  return abs(a - b) / scale;
}

SeriesResult lhs_double_series(const IdentityCase& c, const PrecisionContext& ctx) {
  const IdentityCase k = normalized(c);
  validate(k, ctx);
  DoubleSeriesFactors f(k.rho, second_lower_parameter(k, ctx), k, ctx);
  const Real::Bits bits = ctx.working_bits();
  if (k.x.is_zero()) return SeriesResult{f.weight(0), 1, Real(bits), true};
  return detail::sum_series(
      ctx,
      [&](long n) {
        Scalar block(bits);
        for (long m = 0; m <= n; ++m) block += f.u(m) * f.v(n - m);
        return f.weight(n) * block;
      },
      nullptr, "double series");
}

bool diagonal_reindex_check(const IdentityCase& c, const PrecisionContext& ctx) {
  const IdentityCase k = normalized(c);
  const SeriesResult diagonal = lhs_double_series(k, ctx);
  DoubleSeriesFactors f(k.rho, second_lower_parameter(k, ctx), k, ctx);
  const Real::Bits bits = ctx.working_bits();
  // Shell K holds the (m, n) with max(m, n) = K.
  const SeriesResult rectangular = detail::sum_series(
      ctx,
      [&](long big) {
        Scalar shell(bits);
        for (long j = 0; j < big; ++j) {
          shell += f.weight(big + j) * (f.u(big) * f.v(j) + f.u(j) * f.v(big));
        }
        shell += f.weight(2 * big) * f.u(big) * f.v(big);
        return shell;
      },
      nullptr, "rectangular double series");
  const Real slack = diagonal.tail_estimate + rectangular.tail_estimate +
                     ctx.pow10(-ctx.digits()) * (abs(diagonal.value) + Real(1, bits));
  return abs(diagonal.value - rectangular.value) <= slack;
}

SeriesResult rhs_theorem(const IdentityCase& c, const PrecisionContext& ctx,
                         std::vector<Scalar>* terms) {
  if (!is_shift_theorem(c.theorem)) {
    throw DomainError("rhs_theorem handles T21..T24, got " + std::string(to_string(c.theorem)));
  }
  validate(c, ctx);
  const Real::Bits bits = ctx.working_bits();
  const long i = c.i;
  const Scalar& rho = c.rho;
  const Scalar one(1, bits);
  const Scalar two(2, bits);
  const Scalar half_rho = rho / 2L;

  // Closed form of the m-th 2F1 at -1 is
  //   pre * 2^m * shift(m) * sum_r s^r C(i,r) Gamma(A_m + r/2) / (Gamma(A_m) Gamma(A_m + 1/2)
  //   Gamma(D_m + r/2)) with A_m = A_0 + m/2 and D_m = D_0 - m/2.
  Scalar pre = sqrt_pi(ctx);
  Scalar a0(bits);
  Scalar d0(bits);
  switch (c.theorem) {
    case Theorem::T21:
      pre *= gamma_factor(rho + i, "Gamma(rho+i)", ctx);
      a0 = plus_halves(rho, i - 1, ctx);
      d0 = plus_halves(Scalar(bits), 1 - i, ctx);
      break;
    case Theorem::T22:
      pre *= gamma_factor(rho - i, "Gamma(rho-i)", ctx);
      a0 = plus_halves(rho, -i - 1, ctx);
      d0 = plus_halves(Scalar(bits), 1 - i, ctx);
      break;
    case Theorem::T23:
      pre *= pow(Real(2, bits), rho - 1L);
      pre *= gamma_factor(two - rho + i, "Gamma(2-rho+i)", ctx);
      a0 = plus_halves(one - half_rho, i, ctx);
      d0 = plus_halves(one - half_rho, -i, ctx);
      break;
    default:  // T24
      pre *= pow(Real(2, bits), rho - 1L);
      pre *= gamma_factor(two - rho - i, "Gamma(2-rho-i)", ctx);
      a0 = plus_halves(one - half_rho, -i, ctx);
      d0 = plus_halves(one - half_rho, -i, ctx);
      break;
  }

  HalfStepRgamma recip_a(a0, ctx);
  HalfStepRgamma recip_d(d0, ctx);
  const bool printed = c.mode == Mode::AsPrinted;
  const Scalar one_minus_rho = one - rho;

  auto closed_form = [&](long m) {
    Real two_m(1, bits);
    mpfr_mul_2si(two_m.get(), two_m.get(), m, MPFR_RNDN);
    Scalar value = pre * two_m;
    const Scalar a_m = plus_halves(a0, m, ctx);
    auto d_m = [&](long r) -> const Scalar& { return recip_d(r - m); };
    switch (c.theorem) {
      case Theorem::T21:
        value *= gamma_ratio_shift(one_minus_rho - m, i, ctx);
        return value * detail::paired_binomial_sum(a_m, recip_a(m), recip_a(m + 1), i, true, d_m,
                                                   ctx);
      case Theorem::T22:
        if (printed && m % 2 == 1) value = -value;
        return value * detail::paired_binomial_sum(a_m, recip_a(m), recip_a(m + 1), i, false, d_m,
                                                   ctx);
      case Theorem::T23:
        value *= gamma_ratio_shift(Scalar(-m, bits), i, ctx);
        if (printed) {
          value *= recip_a(m);
          value *= recip_a(m - 2);
          return value * detail::literal_binomial_sum(a_m, plus_halves(d0, -m, ctx), i, true, ctx);
        }
        return value * detail::paired_binomial_sum(a_m, recip_a(m), recip_a(m + 1), i, true, d_m,
                                                   ctx);
      default:
        return value * detail::paired_binomial_sum(a_m, recip_a(m), recip_a(m + 1), i, false, d_m,
                                                   ctx);
    }
  };

  Scalar coeff(1, bits);  // x^m / ((rho)_m m!)
  return detail::sum_series(
      ctx,
      [&](long m) {
        if (m > 0) coeff *= c.x / ((rho + (m - 1)) * m);
        if (coeff.is_zero()) return Scalar(bits);
        return c.delta.at(m, ctx) * coeff * closed_form(m);
      },
      terms, "closed-form series");
}

SeriesResult rhs_corollary_31(const Scalar& rho, const Scalar& x, const DeltaSequence& delta,
                              const PrecisionContext& ctx, std::vector<Scalar>* terms) {
  require_no_pole(rho, "rho", ctx);
  const Scalar half_rho = rho / 2L;
  return quarter_square_series({rho, half_rho, plus_halves(half_rho, 1, ctx)}, x, delta,
                               [](long m) { return 2 * m; }, ctx, terms);
}

SeriesResult rhs_corollary_32(const Scalar& rho, const Scalar& x, const DeltaSequence& delta,
                              Mode mode, const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  const Scalar two(2, bits);
  require_no_pole(rho, "rho", ctx);
  require_no_pole(two - rho, "2-rho", ctx);
  const Scalar half_rho = rho / 2L;
  const Scalar zero(bits);
  const SeriesResult even = quarter_square_series(
      {plus_halves(zero, 1, ctx), plus_halves(half_rho, 1, ctx), plus_halves(-half_rho, 3, ctx)},
      x, delta, [](long m) { return 2 * m; }, ctx, nullptr);
  const bool printed = mode == Mode::AsPrinted;
  const SeriesResult odd = quarter_square_series(
      {plus_halves(zero, 3, ctx), half_rho + 1L, two - half_rho}, x, delta,
      [printed](long m) { return printed ? m : 2 * m + 1; }, ctx, nullptr);
  const Scalar factor = (Scalar(1, bits) - rho) * x * 2L / (rho * (two - rho));
  return combine(even, odd, factor);
}

VerificationReport bailey_product_check(const Scalar& rho, const Scalar& x, Theorem which,
                                        const PrecisionContext& ctx) {
  if (which != Theorem::B11 && which != Theorem::B12) {
    throw DomainError("bailey_product_check handles B11 and B12");
  }
  const Real::Bits bits = ctx.working_bits();
  IdentityCase c = normalized(IdentityCase{which, rho, 0, x,
                                           DeltaSequence::constant(Scalar(1, bits)),
                                           Mode::Corrected});
  VerificationReport report = blank_report(c, ctx);
  validate(c, ctx);

  const Scalar sigma = second_lower_parameter(c, ctx);
  const SeriesResult f1 = pfq({{}, {rho}, x}, ctx);
  const SeriesResult f2 = pfq({{}, {sigma}, -x}, ctx);
  report.lhs = f1.value * f2.value;
  report.lhs_tail = abs(f1.value) * f2.tail_estimate + abs(f2.value) * f1.tail_estimate +
                    f1.tail_estimate * f2.tail_estimate;
  report.terms_used_lhs = std::max(f1.terms_used, f2.terms_used);

  const SeriesResult rhs = which == Theorem::B11
                               ? rhs_corollary_31(rho, x, c.delta, ctx, &report.terms)
                               : rhs_corollary_32(rho, x, c.delta, Mode::Corrected, ctx);
  report.rhs = rhs.value;
  report.rhs_tail = rhs.tail_estimate;
  report.terms_used_rhs = rhs.terms_used;
  classify(report, ctx);
  return report;
}

VerificationReport verify(const IdentityCase& c, const PrecisionContext& ctx) {
  const IdentityCase k = normalized(c);
  VerificationReport report = blank_report(k, ctx);
  try {
    validate(k, ctx);
    if (k.theorem == Theorem::B11 || k.theorem == Theorem::B12) {
      return bailey_product_check(k.rho, k.x, k.theorem, ctx);
    }
    const SeriesResult lhs = lhs_double_series(k, ctx);
    report.lhs = lhs.value;
    report.lhs_tail = lhs.tail_estimate;
    report.terms_used_lhs = lhs.terms_used;

    auto evaluate_rhs = [&](Mode mode, std::vector<Scalar>* terms) {
      IdentityCase variant = k;
      variant.mode = mode;
      switch (k.theorem) {
        case Theorem::C31: return rhs_corollary_31(k.rho, k.x, k.delta, ctx, terms);
        case Theorem::C32: return rhs_corollary_32(k.rho, k.x, k.delta, mode, ctx);
        default: return rhs_theorem(variant, ctx, terms);
      }
    };
    const SeriesResult rhs = evaluate_rhs(k.mode, &report.terms);
    report.rhs = rhs.value;
    report.rhs_tail = rhs.tail_estimate;
    report.terms_used_rhs = rhs.terms_used;
    classify(report, ctx);

    const bool suspect = k.theorem == Theorem::T22 || k.theorem == Theorem::T23 ||
                         k.theorem == Theorem::C32;
    if (suspect && k.mode == Mode::AsPrinted) {
      const SeriesResult corrected = evaluate_rhs(Mode::Corrected, nullptr);
      report.other_mode_rel_error = relative_error(report.lhs, corrected.value);
      if (report.verdict == Verdict::Fail &&
          *report.other_mode_rel_error <= verification_tolerance(ctx)) {
        report.diagnostic = "as-printed form disagrees; corrected form agrees (rel_error " +
                            to_decimal(*report.other_mode_rel_error, 6) + ")";
      }
    }
  } catch (const DomainError& e) {
    report.verdict = Verdict::DomainError;
    report.diagnostic = std::string("DomainPole: ") + e.what();
  } catch (const Error& e) {
    report.verdict = Verdict::Fail;
    report.diagnostic = e.what();
  }
  return report;
}

}  // namespace kummer

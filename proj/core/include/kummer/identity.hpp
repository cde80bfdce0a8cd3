#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/context.hpp"
#include "kummer/delta.hpp"
#include "kummer/hypergeometric.hpp"
#include "kummer/scalar.hpp"
#include "kummer/summation.hpp"

namespace kummer {

/// The identities the engine can check.
///
///   T21..T24  sum_m sum_n (-1)^n Delta_{m+n} x^{m+n} / ((rho)_m (sigma)_n m! n!)
///             against its single-series closed form, with sigma = rho+i,
///             rho-i, 2-rho+i, 2-rho-i respectively.
///   C31, C32  the i = 0 reductions of T21 and T23.
///   B11, B12  the product formulas 0F1(;rho;x) 0F1(;rho;-x) and
///             0F1(;rho;x) 0F1(;2-rho;-x) in 0F3 form (Delta = 1).
enum class Theorem { T21, T22, T23, T24, C31, C32, B11, B12 };

std::string_view to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view text);

/// One verification instance.
struct IdentityCase {
  Theorem theorem = Theorem::T21;
  Scalar rho;
  long i = 0;
  Scalar x;
  DeltaSequence delta;
  Mode mode = Mode::Corrected;
};

/// Copy with the per-theorem constraints applied: i = 0 for the
/// corollaries and Bailey products, Delta = 1 for the Bailey products.
IdentityCase normalized(IdentityCase c);

/// Second denominator parameter sigma of the double series.
Scalar second_lower_parameter(const IdentityCase& c, const PrecisionContext& ctx);

/// Domain guard. Throws DomainError when i < 0 or when rho or sigma is a
/// nonpositive integer (a Pochhammer denominator would vanish), and for
/// C32/B12 when rho is 0 or 2.
void validate(const IdentityCase& c, const PrecisionContext& ctx);

enum class Verdict { Pass, Fail, Inconclusive, DomainError };

std::string_view to_string(Verdict verdict);

struct VerificationReport {
  IdentityCase identity;
  Scalar lhs;
  Scalar rhs;
  Real abs_error;
  Real rel_error;
  Real lhs_tail;
  Real rhs_tail;
  long terms_used_lhs = 0;
  long terms_used_rhs = 0;
  Verdict verdict = Verdict::Fail;
  /// Per-m terms of the right-hand series, when it has one.
  std::vector<Scalar> terms;
  /// Error text or mode-comparison note; empty when there is nothing to say.
  std::string diagnostic;
  /// For as-printed cases with a suspected misprint: rel_error of the
  /// corrected reading against the same left-hand side.
  std::optional<Real> other_mode_rel_error;
};

/// 10^-(digits - 15).
Real verification_tolerance(const PrecisionContext& ctx);

/// |a - b| / max(|a|, |b|), zero when both vanish.
Real relative_error(const Scalar& a, const Scalar& b);

/// Direct double sum in diagonal order: blocks m + n = N are added until
/// |block| <= tail_epsilon (1 + |S|) for consecutive_small consecutive N.
/// Works for every theorem (sigma from second_lower_parameter).
SeriesResult lhs_double_series(const IdentityCase& c, const PrecisionContext& ctx);

/// Sums the same double series in rectangular order (shells max(m, n) = K)
/// and checks it agrees with the diagonal order within the combined tail
/// estimates plus rounding.
bool diagonal_reindex_check(const IdentityCase& c, const PrecisionContext& ctx);

/// Single-series closed form for T21..T24. Each term is
///   Delta_m x^m / ((rho)_m m!) * [closed-form 2F1 at -1]
/// with singular gamma ratios taken as limits and denominator gammas as
/// reciprocal gammas. `terms`, when given, receives every term summed.
/// Throws DomainError for other theorems.
SeriesResult rhs_theorem(const IdentityCase& c, const PrecisionContext& ctx,
                         std::vector<Scalar>* terms = nullptr);

/// sum_m Delta_2m (-x^2)^m / ((rho)_m (rho/2)_m (rho/2+1/2)_m 4^m m!).
SeriesResult rhs_corollary_31(const Scalar& rho, const Scalar& x, const DeltaSequence& delta,
                              const PrecisionContext& ctx, std::vector<Scalar>* terms = nullptr);

/// sum_m Delta_2m (-x^2)^m / ((1/2)_m (rho/2+1/2)_m (3/2-rho/2)_m 4^m m!)
///   + 2(1-rho)x/(rho(2-rho)) sum_m Delta_k (-x^2)^m / ((3/2)_m (rho/2+1)_m (2-rho/2)_m 4^m m!)
/// with k = m as printed, k = 2m+1 corrected. Throws DomainError for rho in {0, 2}.
SeriesResult rhs_corollary_32(const Scalar& rho, const Scalar& x, const DeltaSequence& delta,
                              Mode mode, const PrecisionContext& ctx);

/// Product of two 0F1 series against the 0F3 form (B11 or B12).
VerificationReport bailey_product_check(const Scalar& rho, const Scalar& x, Theorem which,
                                        const PrecisionContext& ctx);

/// Evaluates both sides and classifies the case:
///   Inconclusive  a tail exceeds tolerance/10 (relative to max(1, |value|))
///   Pass          otherwise, rel_error <= tolerance
///   Fail          otherwise, or any error while evaluating (message in diagnostic)
VerificationReport verify(const IdentityCase& c, const PrecisionContext& ctx);

}  // namespace kummer

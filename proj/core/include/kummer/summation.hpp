#pragma once

#include <optional>
#include <string_view>

#include "kummer/context.hpp"
#include "kummer/scalar.hpp"

namespace kummer {

/// Which reading of a closed form to evaluate. `AsPrinted` keeps suspected
/// misprints verbatim for forensics; `Corrected` is the default.
enum class Mode { AsPrinted, Corrected };

std::string_view to_string(Mode mode);
/// Accepts "as-printed" and "corrected".
std::optional<Mode> parse_mode(std::string_view text);

struct KummerInput {
  Scalar a;
  Scalar b;
  /// Lower-parameter shift; must be >= 0.
  long i = 0;
  Mode mode = Mode::Corrected;
};

/// Kummer's theorem:
///   2F1(a, b; 1+a-b; -1) = Gamma(1+a/2) Gamma(1+a-b) / (Gamma(1+a) Gamma(1+a/2-b)).
/// Denominator gammas go through rgamma; a pole in either numerator gamma
/// raises PoleError naming the factor.
Scalar kummer_classical(const Scalar& a, const Scalar& b, const PrecisionContext& ctx);

/// 2F1(a, b; 1+a-b+i; -1) in closed form:
///   2^-a sqrt(pi) [Gamma(b-i)/Gamma(b)] Gamma(1+a-b+i)
///     / (Gamma(a/2-b+i/2+1/2) Gamma(a/2-b+i/2+1))
///     * sum_r (-1)^r C(i,r) Gamma(a/2-b+i/2+r/2+1/2) / Gamma(a/2-i/2+r/2+1/2).
/// Both modes evaluate the same formula. The Gamma(b-i)/Gamma(b) factor is
/// taken as a limit, so b may be a nonpositive integer.
Scalar kummer_general_plus(const KummerInput& input, const PrecisionContext& ctx);

/// 2F1(a, b; 1+a-b-i; -1) in closed form. Corrected:
///   2^-a sqrt(pi) Gamma(1+a-b-i) / (Gamma(a/2-b-i/2+1/2) Gamma(a/2-b-i/2+1))
///     * sum_r C(i,r) Gamma(a/2-b-i/2+r/2+1/2) / Gamma(a/2-i/2+r/2+1/2).
/// AsPrinted uses Gamma(1+a-b+i) and a/2-b+i/2 in the two prefactor
/// denominators instead.
Scalar kummer_general_minus(const KummerInput& input, const PrecisionContext& ctx);

}  // namespace kummer

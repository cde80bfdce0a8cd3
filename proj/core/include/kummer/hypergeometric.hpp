#pragma once

#include <vector>

#include "kummer/context.hpp"
#include "kummer/scalar.hpp"

namespace kummer {

/// Parameters of pFq(a_1..a_p; b_1..b_q; x).
struct HyperParams {
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;
  Scalar x;
};

/// A truncated series value.
struct SeriesResult {
  Scalar value;
  long terms_used = 0;
  /// Estimate of |sum of omitted terms|; zero when `terminated`.
  Real tail_estimate;
  /// The sum was finite (terminating parameter or x = 0).
  bool terminated = false;
};

/// Direct summation of pFq with the term recurrence
///   t_{n+1} = t_n * prod(a_j + n) / prod(b_j + n) * x / (n + 1).
///
/// Stops at termination (an upper parameter -m ends the sum after m + 1
/// terms) or once |t_n| <= tail_epsilon * (1 + |S_n|) for
/// consecutive_small consecutive n. A lower parameter that is a
/// nonpositive integer -k is only accepted when an upper -m with m <= k
/// ends the sum first; otherwise DomainPoleError. Hitting max_terms with
/// non-decreasing terms raises DivergenceError; with decreasing terms the
/// partial sum is returned with a conservative tail estimate.
SeriesResult pfq(const HyperParams& params, const PrecisionContext& ctx);

/// sum_{n=0}^{m} (-m)_n (b)_n / ((c)_n n!) (-1)^n, i.e. the terminating
/// 2F1(-m, b; c; -1). Throws DomainPoleError if c + k = 0 for some
/// 0 <= k <= m - 1, DomainError for m < 0.
Scalar f21_terminating(long m, const Scalar& b, const Scalar& c, const PrecisionContext& ctx);

/// 2F1(a, b; c; -1) as an analytic function of the parameters, through the
/// Pfaff transformation 2F1(a,b;c;-1) = 2^-a 2F1(a, c-b; c; 1/2). The
/// transformed series converges geometrically (ratio 1/2), so this also
/// covers parameters where the series at -1 converges slowly or not at all.
/// Terminating parameters are summed directly at -1.
SeriesResult hyp2f1_minus_one(const Scalar& a, const Scalar& b, const Scalar& c,
                              const PrecisionContext& ctx);

}  // namespace kummer

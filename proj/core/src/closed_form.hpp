#pragma once

#include <map>
#include <string>
#include <utility>

#include "kummer/context.hpp"
#include "kummer/gamma.hpp"
#include "kummer/scalar.hpp"

namespace kummer::detail {

// Gamma(z) with a PoleError that names the offending factor.
Scalar gamma_factor(const Scalar& z, const std::string& name, const PrecisionContext& ctx);

// c + k/2 for integer k.
Scalar plus_halves(const Scalar& c, long halves, const PrecisionContext& ctx);

// rgamma(base + k/2), memoized on k. The closed forms walk their gamma
// arguments in half-integer steps as m and r advance, so most values recur.
class HalfStepRgamma {
 public:
  HalfStepRgamma(Scalar base, const PrecisionContext& ctx) : base_(std::move(base)), ctx_(ctx) {}

  const Scalar& operator()(long k) {
    auto it = memo_.find(k);
    if (it == memo_.end()) {
      it = memo_.emplace(k, rgamma(plus_halves(base_, k, ctx_), ctx_)).first;
    }
    return it->second;
  }

 private:
  Scalar base_;
  const PrecisionContext& ctx_;
  std::map<long, Scalar> memo_;
};

// sum_{r=0}^{i} s^r C(i,r) Gamma(A + r/2) / (Gamma(A) Gamma(A + 1/2)) * recip_d(r)
// with s = -1 when `alternating`. The gamma quotient is expanded without
// poles (see gamma_half_ratio), given rgamma(A) and rgamma(A + 1/2).
// recip_d(r) supplies 1/Gamma(D + r/2); a zero there skips the term.
template <class RecipD>
Scalar paired_binomial_sum(const Scalar& A, const Scalar& rgamma_a, const Scalar& rgamma_a_half,
                           long i, bool alternating, RecipD&& recip_d,
                           const PrecisionContext& ctx) {
  const Real::Bits bits = ctx.working_bits();
  const Scalar a_half = plus_halves(A, 1, ctx);
  Scalar poch_even(1, bits);  // (A)_k
  Scalar poch_odd(1, bits);   // (A + 1/2)_k
  Scalar sum(bits);
  for (long r = 0; r <= i; ++r) {
    const long k = r / 2;
    if (r > 1) {
      if (r % 2 == 0) {
        poch_even *= A + (k - 1);
      } else {
        poch_odd *= a_half + (k - 1);
      }
    }
    const Scalar& recip = recip_d(r);
    if (recip.is_zero()) continue;
    Scalar term = r % 2 == 0 ? poch_even * rgamma_a_half : poch_odd * rgamma_a;
    term *= recip;
    term *= static_cast<long>(binomial(i, r));
    if (alternating && r % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// Same sum with all reciprocal gammas computed on the spot:
// recip_d(r) = rgamma(D + r/2).
Scalar paired_binomial_sum(const Scalar& A, const Scalar& D, long i, bool alternating,
                           const PrecisionContext& ctx);

// sum_{r=0}^{i} s^r C(i,r) Gamma(N + r/2) / Gamma(D + r/2), evaluated term by
// term: a term whose reciprocal gamma vanishes is zero, otherwise a pole of
// Gamma(N + r/2) raises PoleError.
Scalar literal_binomial_sum(const Scalar& N, const Scalar& D, long i, bool alternating,
                            const PrecisionContext& ctx);

}  // namespace kummer::detail

#pragma once

#include <cstdint>
#include <optional>

#include "kummer/context.hpp"
#include "kummer/scalar.hpp"

namespace kummer {

/// The nonpositive integer n with |z - n| <= ctx.pole_tolerance(), if any.
std::optional<long> nearest_pole(const Scalar& z, const PrecisionContext& ctx);

/// Gamma(z) to ctx.digits() relative accuracy (the kernel targets the full
/// working precision). Throws PoleError at nonpositive integers.
Scalar gamma(const Scalar& z, const PrecisionContext& ctx);

/// log Gamma(z) on the branch continuous from the positive real axis.
/// Requires Re z > 0; throws DomainError otherwise.
Scalar log_gamma(const Scalar& z, const PrecisionContext& ctx);

/// 1 / Gamma(z); exactly zero at nonpositive integers (per nearest_pole).
Scalar rgamma(const Scalar& z, const PrecisionContext& ctx);

/// Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1. Throws DomainError for n < 0.
Scalar pochhammer(const Scalar& a, long n, const PrecisionContext& ctx);

/// Gamma(z - i) / Gamma(z) = 1 / (z - i)_i, the analytic limit even where
/// both gammas are singular. Throws RatioPoleError when some z - k,
/// 1 <= k <= i, is zero, DomainError for i < 0.
Scalar gamma_ratio_shift(const Scalar& z, long i, const PrecisionContext& ctx);

/// Gamma(a + r/2) / (Gamma(a) Gamma(a + 1/2)) for r >= 0.
///
/// This is the pairing that appears in every generalized Kummer closed form:
/// two reciprocal gammas of the prefactor against one gamma of the r-sum.
/// The quotient is entire in `a`:
///   r = 2k     -> (a)_k       / Gamma(a + 1/2)
///   r = 2k + 1 -> (a + 1/2)_k / Gamma(a)
Scalar gamma_half_ratio(const Scalar& a, long r, const PrecisionContext& ctx);

/// Exact binomial coefficient C(i, r). Throws DomainError if r > i, either
/// argument is negative, or the value overflows 64 bits.
std::uint64_t binomial(long i, long r);

}  // namespace kummer

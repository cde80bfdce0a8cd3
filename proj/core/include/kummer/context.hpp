#pragma once

#include "kummer/real.hpp"

namespace kummer {

/// Working precision, truncation policy and tolerances for one evaluation.
///
/// `digits` is the number of significant decimal digits a result is
/// reported to. Arithmetic runs `kGuardDigits` beyond that so that rounding
/// in long sums stays below the reported precision. Contexts are plain
/// values: copy them freely, share them across threads.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 20;
  static constexpr int kMinTerms = 10;
  static constexpr int kDefaultDigits = 50;
  static constexpr int kDefaultMaxTerms = 400;
  static constexpr int kDefaultConsecutiveSmall = 5;
  static constexpr int kGuardDigits = 15;

  PrecisionContext(int digits, int max_terms, Real tail_epsilon, int consecutive_small);

  int digits() const noexcept { return digits_; }
  int max_terms() const noexcept { return max_terms_; }
  const Real& tail_epsilon() const noexcept { return tail_epsilon_; }
  int consecutive_small() const noexcept { return consecutive_small_; }

  /// Binary precision used for all arithmetic under this context.
  Real::Bits working_bits() const noexcept { return bits_; }

  /// Absolute distance within which an argument counts as a gamma pole:
  /// 10^(-digits+5).
  const Real& pole_tolerance() const noexcept { return pole_tolerance_; }

  Real real(long value) const { return Real(value, bits_); }
  Real pow10(long exponent) const { return Real::pow10(exponent, bits_); }

  /// Same truncation defaults, `extra` more digits and `depth_factor` times
  /// the term budget. Used by adjudicating oracles.
  PrecisionContext elevated(int extra_digits, int depth_factor) const;
  PrecisionContext with_max_terms(int max_terms) const;

 private:
  int digits_;
  int max_terms_;
  Real tail_epsilon_;
  int consecutive_small_;
  Real::Bits bits_;
  Real pole_tolerance_;
};

/// Context with defaults derived from `digits`: max_terms 400,
/// tail_epsilon 10^(-digits+10), consecutive_small 5.
/// Throws ConfigError for digits < 20.
PrecisionContext make_context(int digits = PrecisionContext::kDefaultDigits);

}  // namespace kummer

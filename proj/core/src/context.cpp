#include "kummer/context.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kummer/errors.hpp"

namespace kummer {
namespace {

Real::Bits bits_for_digits(int digits) {
  // log2(10) = 3.3219...
  return static_cast<Real::Bits>(
      std::ceil((digits + PrecisionContext::kGuardDigits) * 3.321928094887362) + 8);
}

}  // namespace

PrecisionContext::PrecisionContext(int digits, int max_terms, Real tail_epsilon,
                                   int consecutive_small)
    : digits_(digits),
      max_terms_(max_terms),
      tail_epsilon_(std::move(tail_epsilon)),
      consecutive_small_(consecutive_small),
      bits_(bits_for_digits(digits < 1 ? 1 : digits)),
      pole_tolerance_(Real::pow10(-digits + 5, bits_)) {
  if (digits_ < kMinDigits) {
    throw ConfigError("digits must be at least " + std::to_string(kMinDigits) + ", got " +
                      std::to_string(digits_));
  }
  if (max_terms_ < kMinTerms) {
    throw ConfigError("max_terms must be at least " + std::to_string(kMinTerms));
  }
  if (consecutive_small_ < 1) throw ConfigError("consecutive_small must be positive");
  if (!(tail_epsilon_ > 0L) || !(tail_epsilon_ < 1L)) {
    throw ConfigError("tail_epsilon must lie in (0, 1)");
  }
  tail_epsilon_ = tail_epsilon_.rounded(bits_);
}

PrecisionContext PrecisionContext::elevated(int extra_digits, int depth_factor) const {
  const int digits = digits_ + extra_digits;
  return PrecisionContext(digits, max_terms_ * depth_factor,
                          Real::pow10(-digits + 10, bits_for_digits(digits)),
                          consecutive_small_);
}

PrecisionContext PrecisionContext::with_max_terms(int max_terms) const {
  return PrecisionContext(digits_, max_terms, tail_epsilon_, consecutive_small_);
}

PrecisionContext make_context(int digits) {
  if (digits < PrecisionContext::kMinDigits) {
    throw ConfigError("digits must be at least " + std::to_string(PrecisionContext::kMinDigits) +
                      ", got " + std::to_string(digits));
  }
  return PrecisionContext(digits, PrecisionContext::kDefaultMaxTerms,
                          Real::pow10(-digits + 10, bits_for_digits(digits)),
                          PrecisionContext::kDefaultConsecutiveSmall);
}

}  // namespace kummer

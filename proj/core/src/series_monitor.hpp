#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "kummer/context.hpp"
#include "kummer/real.hpp"

namespace kummer::detail {

// Applies the shared stopping rule to a stream of term moduli and keeps
// enough history to estimate the omitted tail. Exactly-zero terms count
// as small but do not enter the ratio estimate.
class SeriesMonitor {
 public:
  explicit SeriesMonitor(const PrecisionContext& ctx) : ctx_(ctx) {}

  // Records term `index`; returns true once the stopping rule holds.
  bool record(long index, const Real& term_modulus, const Real& sum_modulus) {
    const Real threshold =
        ctx_.tail_epsilon() * (sum_modulus + Real(1, sum_modulus.precision()));
    if (!term_modulus.is_zero()) {
      previous_ = std::move(last_);
      last_ = Entry{index, term_modulus};
    }
    small_run_ = term_modulus <= threshold ? small_run_ + 1 : 0;
    return small_run_ >= ctx_.consecutive_small();
  }

  // Observed per-index contraction of the last two nonzero terms.
  std::optional<double> ratio() const {
    if (!last_ || !previous_) return std::nullopt;
    const double gap = static_cast<double>(last_->index - previous_->index);
    const long e_last = last_->modulus.exponent2();
    const long e_prev = previous_->modulus.exponent2();
    // log2 of |t_last| / |t_prev| without leaving the MPFR exponent range.
    const double log2_ratio =
        static_cast<double>(e_last - e_prev) +
        std::log2(mantissa(last_->modulus)) - std::log2(mantissa(previous_->modulus));
    return std::exp2(log2_ratio / gap);
  }

  bool non_decreasing() const {
    const auto r = ratio();
    return r && *r >= 1.0;
  }

  // |t_N| rho/(1-rho) when the observed ratio rho < 0.9, else |t_N| * max_terms.
  Real tail_estimate() const {
    const Real::Bits bits = ctx_.working_bits();
    if (!last_) return Real(bits);
    const auto r = ratio();
    if (!r) return Real(bits);
    if (*r < 0.9) {
      return last_->modulus * Real::from_double(*r / (1.0 - *r), bits);
    }
    return last_->modulus * static_cast<long>(ctx_.max_terms());
  }

 private:
  struct Entry {
    long index;
    Real modulus;
  };

  static double mantissa(const Real& x) {
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
    return d < 0 ? -d : d;
  }

  const PrecisionContext& ctx_;
  std::optional<Entry> last_;
  std::optional<Entry> previous_;
  int small_run_ = 0;
};

}  // namespace kummer::detail

#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/hypergeometric.hpp"
#include "kummer/scalar.hpp"

namespace kummer::detail {

// Sums term_at(0), term_at(1), ... under the shared stopping rule.
// `terms`, when non-null, receives each summed term.
template <class TermAt>
SeriesResult sum_series(const PrecisionContext& ctx, TermAt&& term_at,
                        std::vector<Scalar>* terms, const char* what) {
  SeriesMonitor monitor(ctx);
  Scalar sum(ctx.working_bits());
  for (long n = 0;; ++n) {
    Scalar term = term_at(n);
    sum += term;
    const Real modulus = abs(term);
    if (terms) terms->push_back(std::move(term));
    if (monitor.record(n, modulus, abs(sum))) {
      return SeriesResult{std::move(sum), n + 1, monitor.tail_estimate(), false};
    }
    if (n + 1 >= ctx.max_terms()) {
      if (monitor.non_decreasing()) {
        throw DivergenceError(std::string(what) + ": terms stopped decreasing after " +
                              std::to_string(ctx.max_terms()) + " terms");
      }
      return SeriesResult{std::move(sum), n + 1, monitor.tail_estimate(), false};
    }
  }
}

}  // namespace kummer::detail

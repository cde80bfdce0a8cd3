#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kummer/context.hpp"
#include "kummer/scalar.hpp"

namespace kummer {

/// A bounded complex sequence Delta_m, the free data of the double-series
/// identities.
///
///   Constant(c)          Delta_m = c
///   Geometric(q)         Delta_m = q^m, |q| <= 1
///   Harmonic             Delta_m = 1 / (m + 1)
///   Table(v, fallback)   Delta_m = v[m] for m < v.size(), fallback after
///
/// Every kind carries an overall scale factor (1 unless built by scaled()).
class DeltaSequence {
 public:
  enum class Kind { Constant, Geometric, Harmonic, Table };

  static DeltaSequence constant(Scalar c);
  /// Throws DomainError when |q| > 1 (the sequence would be unbounded).
  static DeltaSequence geometric(Scalar q);
  static DeltaSequence harmonic(Real::Bits bits);
  static DeltaSequence table(std::vector<Scalar> values, Scalar fallback);

  Kind kind() const noexcept { return kind_; }

  /// Delta_m at the context's working precision.
  Scalar at(long m, const PrecisionContext& ctx) const;

  /// c * Delta.
  DeltaSequence scaled(const Scalar& c) const;
  /// conj(Delta_m) for every m.
  DeltaSequence conjugated() const;
  /// True when the sequence is constant in m.
  bool is_constant() const;

  /// Canonical text in the mini-language accepted by parse_delta_spec.
  std::string spec(int digits) const;

 private:
  DeltaSequence(Kind kind, Scalar scale) : kind_(kind), scale_(std::move(scale)) {}

  Kind kind_;
  Scalar scale_;
  std::vector<Scalar> params_;  // Constant/Geometric: one value; Table: entries then fallback
};

/// Parses `const:<c>`, `geom:<q>`, `harmonic`, `table:<v0,v1,...;default>`,
/// optionally prefixed by `<scale>*`. Values use the scalar grammar.
/// Throws ParseError on malformed text, DomainError on |q| > 1.
DeltaSequence parse_delta_spec(std::string_view text, const PrecisionContext& ctx);

}  // namespace kummer

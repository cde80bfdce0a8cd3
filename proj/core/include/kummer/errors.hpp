#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Base of every error raised by the library. Numerical failures are always
/// reported through these types; no operation returns NaN or infinity.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration (precision, truncation policy, CLI options).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar or sequence text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (negative shift, r > i, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma evaluated at a nonpositive integer.
class PoleError : public Error {
 public:
  PoleError(long nearest, std::string what);
  long nearest_pole() const noexcept { return nearest_; }

 private:
  long nearest_;
};

/// Gamma(z - i) / Gamma(z) requested where (z - i)_i vanishes.
class RatioPoleError : public Error {
 public:
  using Error::Error;
};

/// A hypergeometric denominator parameter (Pochhammer symbol) vanishes
/// inside the summation range.
class DomainPoleError : public Error {
 public:
  using Error::Error;
};

/// Series did not converge within the truncation budget.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kummer

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sturmian {

using BigInt = mpz_class;
using Rational = mpq_class;

// Base for every error raised by the library.  `code()` is a stable,
// machine-parsable tag that the CLI prints on standard error.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A request reached past the prefix-determined range of an Alpha.
class HorizonError : public Error {
 public:
  explicit HorizonError(const std::string& what) : Error("E_HORIZON", what) {}
};

// An argument outside the operation's mathematical domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("E_DOMAIN", what) {}
};

// Malformed user input (specs, flags, files).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("E_CONFIG", what) {}
};

Rational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

/// Fractional part {x} = x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

/// Distance from x to the nearest integer.
Rational nearest_int_distance(const Rational& x);

/// Parses "p/q", "p" or a plain decimal such as "0.25".
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// Exact "p/q" (or "p" for integers).
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

double to_double(const Rational& x);

/// Decimal rendering with `digits` significant digits (advisory output only).
std::string to_decimal(const Rational& x, int digits = 15);

/// Natural logarithm of a positive rational, rendered with `digits`
/// significant digits.  Computed with 256-bit MPFR arithmetic.
std::string log_decimal(const Rational& x, int digits = 30);

/// log(a) / log(b) rendered with `digits` significant digits.  Both arguments
/// must be positive and b must differ from 1.
std::string log_ratio_decimal(const Rational& a, const Rational& b, int digits = 30);
double log_ratio(const Rational& a, const Rational& b);

/// Converts to int64, throwing DomainError when it does not fit.
std::int64_t to_int64(const BigInt& x, const char* what);

}  // namespace sturmian

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brouwer1d {

using BigInt = mpz_class;

/// Raised when an operation receives input outside its domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on division by zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element of the rationals, kept in lowest terms with a positive
/// denominator after every operation. Structural equality is value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  /// Builds num/den in canonical form. Throws InvalidInput if den == 0.
  Rational(BigInt num, BigInt den);

  /// Parses a literal of the form `[+-]digits[/digits]` with no whitespace.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Canonical literal text, e.g. "-3/7" or "2".
  std::string to_string() const;

  /// Decimal rendering with exactly `digits` fractional digits, truncated
  /// toward zero. Display only.
  std::string to_decimal(int digits = 12) const;

  /// Largest integer not above this value.
  BigInt floor() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

enum class Ordering { less, equal, greater };

/// Three-way exact comparison by cross-multiplication.
Ordering cmp(const Rational& a, const Rational& b);

enum class Sqrt2Side { below, above };

/// Side of sqrt(2) on which a positive rational lies, decided by comparing
/// x*x against 2. Equality cannot occur for rational x.
Sqrt2Side cmp_sqrt2(const Rational& x);

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace brouwer1d

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace multimom {

/// Arbitrary-precision signed integer. Every counting value in the library
/// (Stirling numbers, binomial coefficients, polynomial coefficients) lives
/// in this type so no order of moment can overflow.
using Integer = mpz_class;

/// base^exp for non-negative integer exponents.
Integer ipow(const Integer& base, unsigned long exp);

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Equality of values is therefore equality of representations.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}            // NOLINT: implicit by design
  Rational(const Integer& n) : value_(n) {}  // NOLINT: implicit by design

  /// num/den, canonicalized. Throws std::invalid_argument if den == 0.
  Rational(Integer num, Integer den);

  /// Accepts "a" or "a/b" with optional leading '-', decimal digits only.
  /// Returns nullopt on malformed input or zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical text form: "a" when the value is integral, else "a/b".
  std::string str() const;

  /// Decimal rendering rounded half-away-from-zero to `digits` places.
  std::string decimal(unsigned digits) const;

  double to_double() const { return value_.get_d(); }

  Rational operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;  // canonical at all times
};

/// base^exp; pow(0, 0) == 1 by the empty-product convention used throughout.
Rational pow(const Rational& base, unsigned long exp);

/// Same, for an arbitrary-precision non-negative exponent. Shortcuts bases
/// 0 and 1; otherwise the exponent must fit in unsigned long (anything
/// larger could not be materialized anyway). Throws std::invalid_argument
/// on negative exponents, std::overflow_error when it cannot fit.
Rational pow(const Rational& base, const Integer& exp);

}  // namespace multimom

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace evenzeta {

using BigInt = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is 0/1. Every constructor and operator normalizes.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(widen(value)), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  /// Parses the canonical text form "num/den" or "num".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Numerator of an integral value; throws DomainError otherwise.
  const BigInt& as_integer() const;

  /// den > 0 and gcd(|num|, den) == 1.
  bool is_normalized() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical text: "num/den", or "num" when den == 1.
  std::string to_string() const;

  /// Approximate value, for display only.
  long double to_long_double() const;

 private:
  template <std::integral T>
  static BigInt widen(T value) {
    if constexpr (std::is_signed_v<T>) {
      return BigInt(static_cast<long>(value));
    } else {
      return BigInt(static_cast<unsigned long>(value));
    }
  }

  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// prod_{j=1}^{i} (2j+1); 1 for i == 0.
BigInt double_factorial_odd(unsigned i);

/// n!, memoized.
BigInt factorial(unsigned n);

BigInt pow2(unsigned e);

}  // namespace evenzeta

#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "evenzeta/rational.hpp"

namespace evenzeta {

/// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
/// of x^i; the top stored coefficient is never zero, so the zero polynomial
/// has no coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(Rational c);
  /// a*x + b
  static Polynomial linear(Rational a, Rational b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;

  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Returns q with q(x) = p(a*x + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Returns q with p(x) = (2x - 2c) * q(x). Throws InexactDivision when
  /// p(c) != 0.
  Polynomial divide_linear_exact(const Rational& c) const;

  /// "465 + 130*x + 10*x^2"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Coefficients in canonical Rational text, ascending.
  std::vector<std::string> to_strings() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace evenzeta

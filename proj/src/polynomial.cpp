#include "evenzeta/polynomial.hpp"

#include <algorithm>

#include "evenzeta/error.hpp"

namespace evenzeta {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::linear(Rational a, Rational b) {
  return Polynomial({std::move(b), std::move(a)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: (((c_n)(ax+b) + c_{n-1})(ax+b) + ...)
  const Polynomial inner = linear(a, b);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::divide_linear_exact(const Rational& c) const {
  if (coeffs_.empty()) return {};
  // Synthetic division by (x - c), then halve.
  const std::size_t n = coeffs_.size() - 1;
  std::vector<Rational> quotient(n);
  Rational acc;
  for (std::size_t i = n + 1; i-- > 0;) {
    acc *= c;
    acc += coeffs_[i];
    if (i > 0) quotient[i - 1] = acc;
  }
  if (!acc.is_zero()) {
    throw InexactDivision("division by (2x - 2*(" + c.to_string() + ")) leaves remainder " +
                          acc.to_string());
  }
  const Rational half(1, 2);
  for (auto& q : quotient) q *= half;
  return Polynomial(std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!unit) out += mag.to_string() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

}  // namespace evenzeta

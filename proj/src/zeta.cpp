#include "evenzeta/zeta.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"
#include "evenzeta/trees.hpp"

namespace evenzeta {

PiMultiple::PiMultiple(Rational coeff, unsigned power) : coeff_(std::move(coeff)), power_(power) {
  if (power_ % 2 != 0) throw DomainError("pi power must be even");
}

PiMultiple& PiMultiple::operator+=(const PiMultiple& rhs) {
  if (power_ != rhs.power_) {
    throw DomainError("adding pi^" + std::to_string(power_) + " and pi^" +
                      std::to_string(rhs.power_) + " multiples");
  }
  coeff_ += rhs.coeff_;
  return *this;
}

PiMultiple& PiMultiple::operator-=(const PiMultiple& rhs) { return *this += -rhs; }

PiMultiple operator*(const PiMultiple& a, const PiMultiple& b) {
  return {a.coeff_ * b.coeff_, a.power_ + b.power_};
}

PiMultiple operator*(const Rational& s, const PiMultiple& a) { return {s * a.coeff_, a.power_}; }

std::string PiMultiple::to_string() const {
  if (power_ == 0) return coeff_.to_string();
  return coeff_.to_string() + " * pi^" + std::to_string(power_);
}

long double PiMultiple::approx() const {
  return coeff_.to_long_double() *
         std::pow(std::numbers::pi_v<long double>, static_cast<long double>(power_));
}

namespace {

unsigned even_power(std::size_t k) { return static_cast<unsigned>(2 * k); }

Rational prod_double_factorials(std::size_t k) {
  BigInt d = 1;
  for (std::size_t i = 1; i <= k; ++i) d *= double_factorial_odd(static_cast<unsigned>(i));
  return Rational(d);
}

}  // namespace

PiMultiple ebar(std::size_t k) {
  return {Rational(BigInt(1), factorial(static_cast<unsigned>(2 * k + 1))), even_power(k)};
}

PiMultiple zeta_even_rational(std::size_t k) {
  if (k == 0) throw DomainError("zeta(2k) needs k >= 1");
  const Rational coeff =
      Rational(compute_Ak(k)) / (Rational(2) * prod_double_factorials(k));
  return {coeff, even_power(k)};
}

Rational zeta_coeff_via_trees(std::size_t k) {
  return generalized_transform(k) / Rational(2);
}

Rational bernoulli_from_zeta_coeff(std::size_t k, const Rational& zeta_coeff) {
  if (k == 0) throw DomainError("B_{2k} needs k >= 1");
  Rational b = Rational(factorial(static_cast<unsigned>(2 * k)) * 2) * zeta_coeff /
               Rational(pow2(static_cast<unsigned>(2 * k)));
  return (k % 2 == 1) ? b : -b;
}

Rational bernoulli_even(std::size_t k) {
  return bernoulli_from_zeta_coeff(k, zeta_even_rational(k).coeff());
}

Rational bernoulli_classical_oracle(std::size_t n) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    const std::size_t m = table.size();
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    Rational sum;
    BigInt binom = 1;  // C(m+1, 0)
    for (std::size_t j = 0; j < m; ++j) {
      sum += Rational(binom) * table[j];
      binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    table.push_back(-sum / Rational(static_cast<unsigned long>(m + 1)));
  }
  return table[n];
}

PiMultiple Fn_closed_form(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) throw DomainError("F_n(k) needs n >= 2 and k >= 1");
  const Rational pk_at_k = compute_Pk(n).poly.eval(Rational(static_cast<unsigned long>(k)));
  Rational falling = 1;  // prod_{i=1}^{n} (2k - 2i + 2)
  for (std::size_t i = 1; i <= n; ++i) {
    falling *= Rational(static_cast<long>(2 * k) - static_cast<long>(2 * i) + 2);
  }
  Rational coeff = pk_at_k * falling /
                   (Rational(2) * Rational(factorial(static_cast<unsigned>(2 * k + 1))) *
                    prod_double_factorials(n - 1));
  if (n % 2 == 0) coeff = -coeff;
  return {coeff, even_power(k)};
}

PiMultiple Fn_partial_sum(std::size_t n, std::size_t k) {
  if (n < 2) throw DomainError("F_n(k) needs n >= 2");
  if (k + 1 < n) {
    throw DomainError("F_" + std::to_string(n) + "(" + std::to_string(k) +
                      ") needs k >= n-1 so that every ebar index is >= 0");
  }
  PiMultiple sum = Rational(static_cast<unsigned long>(k)) * ebar(k);
  for (std::size_t i = 1; i < n; ++i) {
    const PiMultiple term = ebar(k - i) * zeta_even_rational(i);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace evenzeta

#pragma once

#include <cstddef>
#include <string>

#include "evenzeta/rational.hpp"

namespace evenzeta {

/// coeff * pi^power with an even power. Sums require equal powers (a
/// mismatch throws DomainError); products add powers.
class PiMultiple {
 public:
  PiMultiple() = default;
  PiMultiple(Rational coeff, unsigned power);

  const Rational& coeff() const { return coeff_; }
  unsigned power() const { return power_; }

  PiMultiple& operator+=(const PiMultiple& rhs);
  PiMultiple& operator-=(const PiMultiple& rhs);
  friend PiMultiple operator+(PiMultiple a, const PiMultiple& b) { return a += b; }
  friend PiMultiple operator-(PiMultiple a, const PiMultiple& b) { return a -= b; }
  friend PiMultiple operator*(const PiMultiple& a, const PiMultiple& b);
  friend PiMultiple operator*(const Rational& s, const PiMultiple& a);
  PiMultiple operator-() const { return {-coeff_, power_}; }
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;

  /// "1/945 * pi^6"; just the coefficient when power == 0.
  std::string to_string() const;
  /// Floating approximation, display only.
  long double approx() const;

 private:
  Rational coeff_;
  unsigned power_ = 0;
};

/// e_k at z_n = 1/n^2: pi^{2k} / (2k+1)!.
PiMultiple ebar(std::size_t k);

/// zeta(2k) = (pi^{2k}/2) A_k / prod_{i=1}^{k} (2i+1)!!, k >= 1.
PiMultiple zeta_even_rational(std::size_t k);

/// Coefficient of pi^{2k} in zeta(2k) from the tree transform (half of it).
Rational zeta_coeff_via_trees(std::size_t k);

/// B_{2k} = (-1)^{k-1} 2 (2k)! c / 2^{2k}, where zeta(2k) = c pi^{2k}.
Rational bernoulli_from_zeta_coeff(std::size_t k, const Rational& zeta_coeff);

/// B_{2k} through the P_k recursion.
Rational bernoulli_even(std::size_t k);

/// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1. Memoized; shares no
/// code with the P_k path.
Rational bernoulli_classical_oracle(std::size_t n);

/// F_n(k) = (-1)^{n-1} (pi^{2k}/2) P_n(k) prod_{i=1}^{n}(2k-2i+2)
///          / ((2k+1)! prod_{i=1}^{n-1} (2i+1)!!),  n >= 2, k >= 1.
PiMultiple Fn_closed_form(std::size_t n, std::size_t k);

/// F_n(k) = k ebar_k - sum_{i=1}^{n-1} (-1)^{i-1} ebar_{k-i} pbar_i with
/// pbar_i = zeta(2i). Requires n >= 2 and k >= n-1.
PiMultiple Fn_partial_sum(std::size_t n, std::size_t k);

}  // namespace evenzeta

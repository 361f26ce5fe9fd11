#include "evenzeta/pk_engine.hpp"

#include "evenzeta/error.hpp"

namespace evenzeta {
namespace {

Rational as_rational(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

// prod_{i=1}^{k} (2x - 2k + 2i + 1)
Polynomial shifted_odd_product(std::size_t k) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 1; i <= k; ++i) {
    p = p * Polynomial::linear(2, as_rational(2 * i + 1) - as_rational(2 * k));
  }
  return p;
}

}  // namespace

Polynomial f_poly(const IndexSet& s, std::size_t k, const SequenceSpec& seq) {
  Polynomial p = Polynomial::constant(1);
  const Rational shift = -as_rational(2 * k);
  for (auto n : s.indices()) p = p * Polynomial::linear(2, shift + seq.value(n));
  return p;
}

Polynomial apply_Bk(const Polynomial& f, std::size_t k) {
  if (k == 0) throw DomainError("B_k needs k >= 1");
  const Rational at_k = f.eval(as_rational(k));
  Polynomial numerator = shifted_odd_product(k) * at_k;
  numerator -= f * Rational(double_factorial_odd(static_cast<unsigned>(k)));
  return numerator.divide_linear_exact(as_rational(k));
}

std::vector<BkTerm> bk_expand(const IndexSet& s, std::size_t k) {
  if (k < 2) throw DomainError("bk_expand needs k >= 2");
  if (!s.is_subset_of(r_set(k - 2))) {
    throw DomainError("bk_expand: S = " + s.to_value_string() + " is not within R(" +
                      std::to_string(k - 2) + ")");
  }
  const IndexSet s2 = s.shifted();
  const IndexSet low_pool = r_set(k - 1).minus(s2);
  const IndexSet high_pool = r_set(k - 1).shifted().minus(s2);
  const std::size_t last = k - 1 - s.size();

  std::vector<BkTerm> terms;
  terms.reserve(last + 1);
  for (std::size_t j = 0; j <= last; ++j) {
    BkTerm t;
    t.low = s2.united(low_pool.smallest(j));
    t.high = s2.united(high_pool.greatest(last - j));
    t.weight = t.high.odd_product();
    terms.push_back(std::move(t));
  }
  return terms;
}

Polynomial assemble_bk_terms(const std::vector<BkTerm>& terms, std::size_t k) {
  Polynomial sum;
  for (const auto& t : terms) sum += f_poly(t.low, k) * Rational(t.weight);
  return sum;
}

Polynomial coeff_basis_element(std::size_t i, std::size_t k) {
  if (k < 1) throw DomainError("coefficient basis needs k >= 1");
  return f_poly(r_set(i), k - 1);
}

Polynomial expand_coeff_basis(const std::vector<Rational>& coeffs, std::size_t k) {
  Polynomial sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    sum += coeff_basis_element(i, k) * coeffs[i];
  }
  return sum;
}

Polynomial PkEngine::pk(std::size_t k) {
  if (k == 0) throw DomainError("P_k needs k >= 1");
  std::lock_guard lock(mu_);
  while (pk_.size() < k) {
    const std::size_t known = pk_.size();  // P_known is the last entry
    pk_.push_back(apply_Bk(pk_.back(), known));
  }
  return pk_[k - 1];
}

PkPolynomial PkEngine::compute(std::size_t k, bool with_basis) {
  PkPolynomial out{k, pk(k), std::nullopt};
  if (with_basis && k >= 2) {
    out.basis_coeffs = coeffs(k);
    if (expand_coeff_basis(*out.basis_coeffs, k) != out.poly) {
      throw ConsistencyError("coefficient recursion disagrees with P_" + std::to_string(k));
    }
  }
  return out;
}

BigInt PkEngine::ak(std::size_t k) {
  const Rational value = pk(k).eval(as_rational(k));
  if (!value.is_integer() || value.sign() <= 0) {
    throw ConsistencyError("A_" + std::to_string(k) + " = " + value.to_string() +
                           " is not a positive integer");
  }
  return value.num();
}

std::vector<Rational> PkEngine::coeffs(std::size_t k) {
  if (k < 2) throw DomainError("c_{i,k} needs k >= 2");
  std::lock_guard lock(mu_);
  while (coeffs_.size() + 1 < k) {
    const std::size_t kk = coeffs_.size() + 1;  // coeffs_.back() holds c_{.,kk}
    const std::vector<Rational>& c = coeffs_.back();
    // inner[n] = sum_{m=n}^{kk-2} c_m 2^{m-n} m!/n!
    std::vector<Rational> inner(kk - 1);
    for (std::size_t n = 0; n + 2 <= kk; ++n) {
      Rational s;
      for (std::size_t m = n; m + 2 <= kk; ++m) {
        s += c[m] * Rational(pow2(static_cast<unsigned>(m - n)) *
                             factorial(static_cast<unsigned>(m)) /
                             factorial(static_cast<unsigned>(n)));
      }
      inner[n] = s;
    }
    std::vector<Rational> next(kk);
    for (std::size_t i = 0; i < kk; ++i) {
      BigInt outer = 1;
      for (std::size_t j = i + 1; j + 1 <= kk; ++j) outer *= static_cast<unsigned long>(2 * j + 3);
      Rational s;
      for (std::size_t n = 0; n <= i && n < inner.size(); ++n) {
        s += Rational(double_factorial_odd(static_cast<unsigned>(n))) * inner[n];
      }
      next[i] = Rational(outer) * s;
    }
    coeffs_.push_back(std::move(next));
  }
  return coeffs_[k - 2];
}

PkEngine& default_engine() {
  static PkEngine engine;
  return engine;
}

PkPolynomial compute_Pk(std::size_t k, bool with_basis) {
  return default_engine().compute(k, with_basis);
}

BigInt compute_Ak(std::size_t k) { return default_engine().ak(k); }

std::vector<Rational> coeff_recursion(std::size_t k) { return default_engine().coeffs(k); }

Polynomial translated_Pk(std::size_t k, bool half_scale) {
  const Rational shift = as_rational(k) - Rational(3, 2);
  return compute_Pk(k).poly.compose_affine(half_scale ? Rational(1, 2) : Rational(1), shift);
}

bool lemma_2ni_check(std::size_t n) {
  Polynomial lhs = Polynomial::constant(1);
  for (std::size_t i = 1; i <= n; ++i) lhs = lhs * Polynomial::linear(1, as_rational(2 * i + 3));

  Polynomial rhs;
  Polynomial running = Polynomial::constant(1);  // prod_{j=1}^{i} (u+2j+1)
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) running = running * Polynomial::linear(1, as_rational(2 * i + 1));
    const BigInt scale = pow2(static_cast<unsigned>(n - i)) *
                         factorial(static_cast<unsigned>(n)) /
                         factorial(static_cast<unsigned>(i));
    rhs += running * Rational(scale);
  }
  return lhs == rhs;
}

}  // namespace evenzeta

#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <vector>

#include "evenzeta/index_set.hpp"
#include "evenzeta/polynomial.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/sequence.hpp"

namespace evenzeta {

/// f_{S;k}(x) = prod_{n in S} (2x - 2k + R_n); the constant 1 for empty S.
Polynomial f_poly(const IndexSet& s, std::size_t k, const SequenceSpec& seq = {});

/// B_k(f)(x) = [f(k) prod_{i=1}^{k} (2x-2k+2i+1) - f(x) prod_{i=1}^{k} (2i+1)] / (2x-2k).
/// The numerator always vanishes at x = k; a nonzero remainder throws
/// InexactDivision.
Polynomial apply_Bk(const Polynomial& f, std::size_t k);

struct BkTerm {
  BigInt weight;  // Pi S_high(k-1-|S|-j, k)
  IndexSet low;   // S_low(j, k)
  IndexSet high;  // S_high(k-1-|S|-j, k)
};

/// Expansion of B_k(f_{S;k-1}) as sum_j weight_j * f_{low_j;k}, j = 0..k-1-|S|.
///
/// S_low(j,k) is (S+2) plus the j smallest members of R(k-1) - (S+2), and
/// S_high(j',k) is (S+2) plus the j' greatest members of (R(k-1)+2) - (S+2).
/// Reading the complements inside R(k) - (S+2) instead gives the same sets:
/// the j smallest never reach 2k+1 and the j' greatest never reach 3, since
/// j, j' <= k-1-|S|. Either way the result is checked against apply_Bk.
///
/// Requires k >= 2 and S within R(k-2); throws DomainError otherwise.
std::vector<BkTerm> bk_expand(const IndexSet& s, std::size_t k);

/// sum weight * f_{low;k}.
Polynomial assemble_bk_terms(const std::vector<BkTerm>& terms, std::size_t k);

/// prod_{j=1}^{i} (2x - 2k + 2j + 3) = f_{R(i);k-1}(x), the basis in which
/// the coefficient recursion expresses P_k.
Polynomial coeff_basis_element(std::size_t i, std::size_t k);

/// sum_i coeffs[i] * coeff_basis_element(i, k).
Polynomial expand_coeff_basis(const std::vector<Rational>& coeffs, std::size_t k);

struct PkPolynomial {
  std::size_t k = 0;
  Polynomial poly;                                   // monomial basis
  std::optional<std::vector<Rational>> basis_coeffs;  // c_{0..k-2,k}
};

/// Memoized P_k, A_k and c_{i,k}. Safe to share between threads; each value
/// is computed once, in order, under a lock.
class PkEngine {
 public:
  /// P_1 = 1, P_{k+1} = B_k(P_k).
  Polynomial pk(std::size_t k);
  PkPolynomial compute(std::size_t k, bool with_basis = false);
  /// A_k = P_k(k); throws ConsistencyError unless a positive integer.
  BigInt ak(std::size_t k);
  /// c_{0,k}, ..., c_{k-2,k} from c_{0,2} = 1 and
  /// c_{i,k+1} = prod_{j=i+1}^{k-1}(2j+3) sum_{n=0}^{i} prod_{j=1}^{n}(2j+1)
  ///             sum_{m=n}^{k-2} c_{m,k} 2^{m-n} m!/n!.
  std::vector<Rational> coeffs(std::size_t k);

 private:
  std::mutex mu_;
  std::vector<Polynomial> pk_{Polynomial::constant(1)};  // pk_[k-1] = P_k
  std::vector<std::vector<Rational>> coeffs_{{Rational(1)}};  // coeffs_[k-2]
};

/// Process-wide engine used by the free functions below.
PkEngine& default_engine();

PkPolynomial compute_Pk(std::size_t k, bool with_basis = false);
BigInt compute_Ak(std::size_t k);
std::vector<Rational> coeff_recursion(std::size_t k);

/// P_k(x + k - 3/2); with half_scale, P_k(x/2 + k - 3/2).
Polynomial translated_Pk(std::size_t k, bool half_scale = false);

/// prod_{i=1}^{n} (u+2i+3) == sum_{i=0}^{n} 2^{n-i} (n!/i!) prod_{j=1}^{i} (u+2j+1),
/// compared coefficientwise.
bool lemma_2ni_check(std::size_t n);

}  // namespace evenzeta

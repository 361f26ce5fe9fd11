#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "evenzeta/rational.hpp"

namespace evenzeta {

/// The truncated variables z_1, ..., z_N (N >= 1).
class VariableSet {
 public:
  explicit VariableSet(std::vector<Rational> values);

  /// z_n = 1/n^2 for n = 1..count.
  static VariableSet reciprocal_squares(std::size_t count);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

/// Bijection on {0, ..., k-1}; image()[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t k);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }

  std::vector<std::vector<std::size_t>> cycles() const;
  /// prod over cycles of (-1)^(|C|-1).
  int sign() const;
  /// Sign from the inversion count; independent of cycles().
  int parity_sign() const;

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// e_k by extracting coefficients of prod (1 + z_i t). k > N throws
/// DomainError unless allow_beyond_size, in which case the result is 0.
Rational elementary_symmetric(const VariableSet& vars, std::size_t k,
                              bool allow_beyond_size = false);

/// p_k = sum z_i^k, k >= 1.
Rational power_sum(const VariableSet& vars, std::size_t k);

enum class GroupEnumeration {
  kCycleType,        // partitions of k with multiplicity k!/(prod m_j! j^m_j)
  kAllPermutations,  // every sigma in S_k
};

inline constexpr std::size_t kDefaultCycleIndexBound = 8;

/// (1/k!) sum_{sigma in S_k} sgn(sigma) prod_{C in sigma} p_|C|.
/// Throws BoundError when k > bound.
Rational cycle_index_elementary(const VariableSet& vars, std::size_t k,
                                GroupEnumeration mode = GroupEnumeration::kCycleType,
                                std::size_t bound = kDefaultCycleIndexBound);

/// Visits every partition of k as a multiplicity vector m (m[j] = number of
/// parts equal to j, index 0 unused).
void for_each_cycle_type(std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Number of permutations of S_k with cycle type m.
BigInt cycle_type_count(const std::vector<std::size_t>& multiplicities);

struct NewtonGirardResult {
  bool passed = false;
  Rational lhs;  // (-1)^(k-1) p_k
  Rational rhs;  // k e_k - sum_{i<k} (-1)^(i-1) e_{k-i} p_i
};

/// Checks (-1)^(k-1) p_k = k e_k - sum_{i=1}^{k-1} (-1)^(i-1) e_{k-i} p_i.
NewtonGirardResult newton_girard_check(const VariableSet& vars, std::size_t k);

}  // namespace evenzeta

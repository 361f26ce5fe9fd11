#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "evenzeta/index_set.hpp"
#include "evenzeta/polynomial.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/sequence.hpp"

namespace evenzeta {

inline constexpr std::size_t kTreeEnumerationBound = 16;
inline constexpr std::size_t kTreeSumBound = 14;

/// Plane tree with k vertices, encoded by the level of the last preorder
/// vertex after each attachment: levels() = (l_2, ..., l_k), with l_2 = 1 and
/// 1 <= l_{t+1} <= l_t + 1. Deleting the last preorder vertex drops the last
/// entry. The single-vertex tree has no levels.
class PlaneTree {
 public:
  using Level = std::uint32_t;

  PlaneTree() = default;
  /// Throws DomainError on a malformed level sequence.
  explicit PlaneTree(std::vector<Level> levels);

  std::size_t vertex_count() const { return levels_.size() + 1; }
  const std::vector<Level>& levels() const { return levels_; }
  /// Level of the last preorder vertex; 0 for the single vertex.
  Level last_level() const { return levels_.empty() ? 0 : levels_.back(); }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend auto operator<=>(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<Level> levels_;
};

/// C_n.
BigInt catalan(std::size_t n);

/// Lazily yields the C_{k-1} plane trees with k vertices in lexicographic
/// order of level sequences.
class TreeEnumerator {
 public:
  /// Throws BoundError (quoting C_{k-1}) when k > bound, DomainError for k == 0.
  explicit TreeEnumerator(std::size_t k, std::size_t bound = kTreeEnumerationBound);

  std::optional<PlaneTree> next();

 private:
  std::size_t k_;
  std::vector<PlaneTree::Level> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<PlaneTree> enumerate_trees(std::size_t k, std::size_t bound = kTreeEnumerationBound);

/// Low(T), High(T), wt(T) under the odd sequence.
struct TreeData {
  IndexSet low;
  IndexSet high;
  BigInt weight = 1;
};

/// Same, with products taken in an arbitrary sequence R.
struct GeneralTreeData {
  IndexSet low;
  IndexSet high;
  Rational weight = 1;
};

/// Replays the attachment history. Growing T' (t-1 vertices) to T (t
/// vertices) with the new vertex at level i:
///   Low(T)  = (Low(T')+2) plus the smallest members of R(t-2) - (Low(T')+2),
///             as many as make |Low(T)| = t-i-1;
///   High(T) = (Low(T')+2) plus the i-1 greatest members of
///             (R(t-2)+2) - (Low(T')+2);
///   wt(T)   = wt(T') * Pi High(T).
/// Each step is one term of the B_{t-1} expansion of f_{Low(T');t-2}, with
/// j = l' + 1 - i where l' is the level of the previous last vertex; that is
/// what fixes the size of Low(T).
TreeData tree_data(const PlaneTree& tree);
GeneralTreeData tree_data(const PlaneTree& tree, const SequenceSpec& seq);

/// Weights of all trees in T_k summed per distinct Low(T).
template <class Weight>
struct TreeTotals {
  std::map<IndexSet, Weight> weight_by_low;
  Weight level_one_weight{};  // trees whose last preorder vertex is at level 1
  BigInt tree_count = 0;
};

/// Folds every tree of T_k (k >= 2). Work is split by level-sequence prefix
/// across threads; the result does not depend on the split.
TreeTotals<BigInt> fold_trees(std::size_t k, std::size_t bound = kTreeSumBound);
TreeTotals<Rational> fold_trees(std::size_t k, const SequenceSpec& seq,
                                std::size_t bound = kTreeSumBound);

/// sum_{T in T_k} wt(T) f_{Low(T);k-1}(x). Requires 2 <= k <= bound.
Polynomial pk_via_trees(std::size_t k, std::size_t bound = kTreeSumBound);
/// sum_{T in T_k} wt(T) Pi(Low(T)+2). Requires 2 <= k <= bound.
BigInt ak_via_trees(std::size_t k, std::size_t bound = kTreeSumBound);
/// 2^{k-2} * sum of wt(T) over trees whose last vertex is at level 1.
BigInt leading_coeff_via_trees(std::size_t k, std::size_t bound = kTreeSumBound);

/// (sum_{T in T_k} wt_R(T) Pi_R(Low(T)+2)) / prod_{j=1}^{k} Pi_R R(j).
/// With the odd sequence this is 2 zeta(2k) / pi^{2k}. Needs R_1..R_k.
Rational generalized_transform(std::size_t k, const SequenceSpec& seq = {},
                               std::size_t bound = kTreeSumBound);

}  // namespace evenzeta

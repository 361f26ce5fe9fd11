#include "evenzeta/trees.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"

namespace evenzeta {

PlaneTree::PlaneTree(std::vector<Level> levels) : levels_(std::move(levels)) {
  if (!levels_.empty() && levels_.front() != 1) {
    throw DomainError("level sequence must start at level 1");
  }
  for (std::size_t t = 1; t < levels_.size(); ++t) {
    if (levels_[t] < 1 || levels_[t] > levels_[t - 1] + 1) {
      throw DomainError("level " + std::to_string(levels_[t]) + " at position " +
                        std::to_string(t + 2) + " cannot follow level " +
                        std::to_string(levels_[t - 1]));
    }
  }
}

BigInt catalan(std::size_t n) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / static_cast<unsigned long>(n + 1);
}

namespace {

void check_tree_bound(std::size_t k, std::size_t bound) {
  if (k == 0) throw DomainError("a plane tree has at least one vertex");
  if (k > bound) {
    throw BoundError("k = " + std::to_string(k) + " exceeds the tree bound " +
                     std::to_string(bound) + " (would enumerate C_" + std::to_string(k - 1) +
                     " = " + catalan(k - 1).get_str() + " trees)");
  }
}

void check_sum_range(std::size_t k, std::size_t bound) {
  if (k < 2) throw DomainError("tree sums need k >= 2");
  check_tree_bound(k, bound);
}

// Weight arithmetic for the odd sequence (integers) or a custom one.
struct OddProducts {
  using Weight = BigInt;
  Weight product(const IndexSet& s) const { return s.odd_product(); }
};

struct SeqProducts {
  using Weight = Rational;
  const SequenceSpec* seq;
  Weight product(const IndexSet& s) const { return s.product(*seq); }
};

template <class Weight>
struct GrowState {
  IndexSet low;
  IndexSet high;
  Weight weight = 1;
  std::size_t vertices = 2;
  PlaneTree::Level level = 1;
};

template <class Products>
GrowState<typename Products::Weight> grow(const GrowState<typename Products::Weight>& prev,
                                          PlaneTree::Level level, const Products& products) {
  const std::size_t t = prev.vertices + 1;
  const IndexSet s2 = prev.low.shifted();
  const IndexSet low_pool = r_set(t - 2).minus(s2);
  const IndexSet high_pool = r_set(t - 2).shifted().minus(s2);
  const std::size_t low_size = t - level - 1;
  if (low_size < s2.size() || low_size - s2.size() > low_pool.size() ||
      level - 1 > high_pool.size()) {
    throw ConsistencyError("tree step to level " + std::to_string(level) + " at vertex " +
                           std::to_string(t) + " has no valid Low/High");
  }
  GrowState<typename Products::Weight> next;
  next.low = s2.united(low_pool.smallest(low_size - s2.size()));
  next.high = s2.united(high_pool.greatest(level - 1));
  next.weight = prev.weight * products.product(next.high);
  next.vertices = t;
  next.level = level;
  return next;
}

template <class Products>
GrowState<typename Products::Weight> replay(const PlaneTree& tree, const Products& products) {
  GrowState<typename Products::Weight> state;
  if (tree.vertex_count() <= 2) {
    state.vertices = tree.vertex_count();
    state.level = tree.last_level();
    return state;
  }
  for (std::size_t t = 1; t < tree.levels().size(); ++t) {
    state = grow(state, tree.levels()[t], products);
  }
  return state;
}

template <class Products>
void fold_subtree(const GrowState<typename Products::Weight>& state, std::size_t k,
                  const Products& products, TreeTotals<typename Products::Weight>& totals) {
  if (state.vertices == k) {
    totals.weight_by_low[state.low] += state.weight;
    if (state.level == 1) totals.level_one_weight += state.weight;
    totals.tree_count += 1;
    return;
  }
  for (PlaneTree::Level level = 1; level <= state.level + 1; ++level) {
    fold_subtree(grow(state, level, products), k, products, totals);
  }
}

template <class Products>
TreeTotals<typename Products::Weight> fold_impl(std::size_t k, std::size_t bound,
                                                const Products& products) {
  using Weight = typename Products::Weight;
  check_sum_range(k, bound);

  // Split at a prefix depth that gives enough independent subtrees.
  constexpr std::size_t kSplitVertices = 7;
  const std::size_t split = std::min(k, kSplitVertices);
  std::vector<GrowState<Weight>> frontier{GrowState<Weight>{}};
  while (frontier.front().vertices < split) {
    std::vector<GrowState<Weight>> deeper;
    for (const auto& s : frontier) {
      for (PlaneTree::Level level = 1; level <= s.level + 1; ++level) {
        deeper.push_back(grow(s, level, products));
      }
    }
    frontier = std::move(deeper);
  }

  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                      frontier.size());
  std::vector<TreeTotals<Weight>> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < frontier.size(); i += workers) {
          fold_subtree(frontier[i], k, products, partial[w]);
        }
      });
    }
  }

  TreeTotals<Weight> totals;
  for (auto& p : partial) {
    for (auto& [low, weight] : p.weight_by_low) totals.weight_by_low[low] += weight;
    totals.level_one_weight += p.level_one_weight;
    totals.tree_count += p.tree_count;
  }
  return totals;
}

}  // namespace

TreeEnumerator::TreeEnumerator(std::size_t k, std::size_t bound) : k_(k) {
  check_tree_bound(k, bound);
}

std::optional<PlaneTree> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_.assign(k_ - 1, 1);
    if (k_ == 1) done_ = true;
    return PlaneTree(current_);
  }
  // Bump the rightmost position that can still grow and reset the tail.
  for (std::size_t pos = current_.size(); pos-- > 1;) {
    if (current_[pos] <= current_[pos - 1]) {
      ++current_[pos];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, current_.end(), 1);
      return PlaneTree(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<PlaneTree> enumerate_trees(std::size_t k, std::size_t bound) {
  TreeEnumerator it(k, bound);
  std::vector<PlaneTree> out;
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

TreeData tree_data(const PlaneTree& tree) {
  auto s = replay(tree, OddProducts{});
  return {std::move(s.low), std::move(s.high), std::move(s.weight)};
}

GeneralTreeData tree_data(const PlaneTree& tree, const SequenceSpec& seq) {
  auto s = replay(tree, SeqProducts{&seq});
  return {std::move(s.low), std::move(s.high), std::move(s.weight)};
}

TreeTotals<BigInt> fold_trees(std::size_t k, std::size_t bound) {
  return fold_impl(k, bound, OddProducts{});
}

TreeTotals<Rational> fold_trees(std::size_t k, const SequenceSpec& seq, std::size_t bound) {
  return fold_impl(k, bound, SeqProducts{&seq});
}

Polynomial pk_via_trees(std::size_t k, std::size_t bound) {
  const auto totals = fold_trees(k, bound);
  Polynomial sum;
  for (const auto& [low, weight] : totals.weight_by_low) {
    sum += f_poly(low, k - 1) * Rational(weight);
  }
  return sum;
}

BigInt ak_via_trees(std::size_t k, std::size_t bound) {
  const auto totals = fold_trees(k, bound);
  BigInt sum = 0;
  for (const auto& [low, weight] : totals.weight_by_low) {
    sum += weight * low.shifted().odd_product();
  }
  return sum;
}

BigInt leading_coeff_via_trees(std::size_t k, std::size_t bound) {
  const auto totals = fold_trees(k, bound);
  return totals.level_one_weight * pow2(static_cast<unsigned>(k - 2));
}

Rational generalized_transform(std::size_t k, const SequenceSpec& seq, std::size_t bound) {
  if (k == 0) throw DomainError("transform needs k >= 1");
  seq.require(k);
  check_tree_bound(k, bound);

  Rational denominator = 1;
  for (std::size_t j = 1; j <= k; ++j) denominator *= r_set(j).product(seq);

  // T_1 is the single vertex: weight 1, empty Low.
  if (k == 1) return Rational(1) / denominator;

  Rational numerator;
  if (seq.is_default()) {
    const auto totals = fold_trees(k, bound);
    BigInt sum = 0;
    for (const auto& [low, weight] : totals.weight_by_low) {
      sum += weight * low.shifted().odd_product();
    }
    numerator = Rational(sum);
  } else {
    const auto totals = fold_trees(k, seq, bound);
    for (const auto& [low, weight] : totals.weight_by_low) {
      numerator += weight * low.shifted().product(seq);
    }
  }
  return numerator / denominator;
}

}  // namespace evenzeta

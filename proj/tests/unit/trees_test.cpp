#include <gtest/gtest.h>

#include <set>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"
#include "evenzeta/trees.hpp"
#include "evenzeta/zeta.hpp"
#include "test_support.hpp"

namespace evenzeta {
namespace {

using testing::q;

// C_n from C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
std::vector<BigInt> catalan_by_recurrence(std::size_t count) {
  std::vector<BigInt> c{BigInt(1)};
  while (c.size() < count) {
    BigInt next = 0;
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c.push_back(next);
  }
  return c;
}

std::vector<PlaneTree::Level> levels(std::initializer_list<PlaneTree::Level> l) { return l; }

TEST(PlaneTreeTest, Validation) {
  EXPECT_NO_THROW(PlaneTree(levels({1, 2, 3, 1, 2})));
  EXPECT_THROW(PlaneTree(levels({2})), DomainError);
  EXPECT_THROW(PlaneTree(levels({1, 3})), DomainError);
  EXPECT_THROW(PlaneTree(levels({1, 0})), DomainError);
  EXPECT_EQ(PlaneTree().vertex_count(), 1u);
}

TEST(CatalanTest, MatchesRecurrence) {
  const auto c = catalan_by_recurrence(17);
  for (std::size_t n = 0; n < c.size(); ++n) EXPECT_EQ(catalan(n), c[n]);
}

TEST(EnumerateTreesTest, Counts) {
  EXPECT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_EQ(enumerate_trees(4).size(), 5u);
  EXPECT_EQ(enumerate_trees(10).size(), 4862u);
  const auto c = catalan_by_recurrence(13);
  for (std::size_t k = 1; k <= 13; ++k) {
    std::size_t count = 0;
    TreeEnumerator it(k);
    while (it.next()) ++count;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count)), c[k - 1]) << "k=" << k;
  }
}

TEST(EnumerateTreesTest, LexicographicAndDistinct) {
  const auto trees = enumerate_trees(8);
  for (std::size_t i = 1; i < trees.size(); ++i) EXPECT_LT(trees[i - 1], trees[i]);
  EXPECT_EQ(trees.front().levels(), levels({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(trees.back().levels(), levels({1, 2, 3, 4, 5, 6, 7}));
}

TEST(EnumerateTreesTest, BoundNamesCatalanCount) {
  try {
    TreeEnumerator it(17);
    FAIL() << "expected BoundError";
  } catch (const BoundError& e) {
    EXPECT_NE(std::string(e.what()).find("35357670"), std::string::npos) << e.what();
  }
  EXPECT_THROW(TreeEnumerator(0), DomainError);
}

TEST(TreeDataTest, SmallTrees) {
  for (const auto& t : {PlaneTree(), PlaneTree(levels({1}))}) {
    const TreeData d = tree_data(t);
    EXPECT_TRUE(d.low.empty());
    EXPECT_TRUE(d.high.empty());
    EXPECT_EQ(d.weight, 1);
  }
}

TEST(TreeDataTest, FourVertexTrees) {
  struct Expected {
    std::vector<PlaneTree::Level> levels;
    std::vector<unsigned long> low;
    std::vector<unsigned long> high;
    long weight;
  };
  const Expected expected[] = {
      {{1, 1, 1}, {3, 5}, {5}, 5},     {{1, 1, 2}, {5}, {5, 7}, 35},
      {{1, 2, 1}, {3, 5}, {}, 5},      {{1, 2, 2}, {3}, {7}, 35},
      {{1, 2, 3}, {}, {5, 7}, 175},
  };
  const auto trees = enumerate_trees(4);
  ASSERT_EQ(trees.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(trees[i].levels(), expected[i].levels);
    const TreeData d = tree_data(trees[i]);
    EXPECT_EQ(d.low.odd_values(), expected[i].low);
    EXPECT_EQ(d.high.odd_values(), expected[i].high);
    EXPECT_EQ(d.weight, expected[i].weight);
  }
}

TEST(TreeDataTest, LowSizeFollowsLastLevel) {
  for (std::size_t k = 2; k <= 9; ++k) {
    for (const auto& t : enumerate_trees(k)) {
      const TreeData d = tree_data(t);
      EXPECT_EQ(d.low.size(), k - 1 - t.last_level());
      EXPECT_TRUE(d.low.is_subset_of(r_set(k - 2)));
      EXPECT_GE(d.weight, 1);
    }
  }
}

BigInt a_sum_by_replay(std::size_t k) {
  BigInt sum = 0;
  for (const auto& t : enumerate_trees(k)) {
    const TreeData d = tree_data(t);
    sum += d.weight * d.low.shifted().odd_product();
  }
  return sum;
}

TEST(TreeDataTest, ReplaySumsGiveA) {
  EXPECT_EQ(a_sum_by_replay(3), 10);
  EXPECT_EQ(a_sum_by_replay(5), 992250);
  for (std::size_t k = 2; k <= 9; ++k) EXPECT_EQ(a_sum_by_replay(k), compute_Ak(k));
}

TEST(TreeDataTest, GeneralSequenceMatchesOddForDefault) {
  for (const auto& t : enumerate_trees(7)) {
    const TreeData a = tree_data(t);
    const GeneralTreeData b = tree_data(t, SequenceSpec());
    EXPECT_EQ(a.low, b.low);
    EXPECT_EQ(a.high, b.high);
    EXPECT_EQ(Rational(a.weight), b.weight);
  }
}

TEST(FoldTreesTest, AgreesWithReplay) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto totals = fold_trees(k);
    EXPECT_EQ(totals.tree_count, catalan(k - 1));
    std::map<IndexSet, BigInt> by_replay;
    for (const auto& t : enumerate_trees(k)) {
      const TreeData d = tree_data(t);
      by_replay[d.low] += d.weight;
    }
    EXPECT_EQ(totals.weight_by_low, by_replay) << "k=" << k;
  }
}

TEST(PkViaTreesTest, MatchesRecursion) {
  EXPECT_EQ(pk_via_trees(2), Polynomial{1});
  EXPECT_EQ(pk_via_trees(4), compute_Pk(4).poly);
  EXPECT_EQ(pk_via_trees(9), compute_Pk(9).poly);
  EXPECT_THROW(pk_via_trees(1), DomainError);
  EXPECT_THROW(pk_via_trees(15), BoundError);
}

TEST(AkViaTreesTest, PublishedValues) {
  EXPECT_EQ(ak_via_trees(2), 1);
  EXPECT_EQ(ak_via_trees(3), 10);
  EXPECT_EQ(ak_via_trees(7).get_str(), "2787683360962500");
  for (std::size_t k = 2; k <= 11; ++k) EXPECT_EQ(ak_via_trees(k), compute_Ak(k));
}

TEST(LeadingViaTreesTest, LevelOneTreesGiveLeadingCoefficient) {
  for (std::size_t k = 2; k <= 11; ++k) {
    EXPECT_EQ(Rational(leading_coeff_via_trees(k)), compute_Pk(k).poly.leading());
  }
}

TEST(TransformTest, DefaultSequence) {
  EXPECT_EQ(generalized_transform(1), q(1, 3));
  EXPECT_EQ(generalized_transform(2), q(1, 45));
  EXPECT_EQ(generalized_transform(3), q(2, 945));
  for (std::size_t k = 1; k <= 10; ++k) {
    EXPECT_EQ(generalized_transform(k), Rational(2) * zeta_even_rational(k).coeff());
  }
}

TEST(TransformTest, ExplicitOddListMatchesDefault) {
  std::vector<Rational> odd;
  for (int n = 1; n <= 8; ++n) odd.emplace_back(2 * n + 1);
  const SequenceSpec seq(odd);
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(generalized_transform(k, seq), generalized_transform(k));
  }
}

TEST(TransformTest, RegressionFixtures) {
  const SequenceSpec ones(std::vector<Rational>(8, Rational(1)));
  // All-ones: every tree has weight 1, so the value is C_{k-1}.
  EXPECT_EQ(generalized_transform(2, ones), q(1));
  EXPECT_EQ(generalized_transform(6, ones), q(42));

  std::vector<Rational> naturals, reciprocals;
  for (int n = 1; n <= 8; ++n) {
    naturals.emplace_back(n);
    reciprocals.emplace_back(BigInt(1), BigInt(n));
  }
  const Rational expected_n[] = {q(1), q(1, 2), q(1, 3), q(11, 48), q(19, 120), q(473, 4320)};
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(generalized_transform(k, SequenceSpec(naturals)), expected_n[k - 1]) << k;
  }
  const Rational expected_inv[] = {q(1), q(2), q(12), q(112), q(1360)};
  for (std::size_t k = 1; k <= 5; ++k) {
    EXPECT_EQ(generalized_transform(k, SequenceSpec(reciprocals)), expected_inv[k - 1]) << k;
  }
}

TEST(TransformTest, SequenceTooShort) {
  const SequenceSpec seq({3, 5, 7});
  EXPECT_NO_THROW(generalized_transform(3, seq));
  EXPECT_THROW(generalized_transform(4, seq), InputError);
  EXPECT_THROW(generalized_transform(0), DomainError);
}

}  // namespace
}  // namespace evenzeta

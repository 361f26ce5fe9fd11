#include <gtest/gtest.h>

#include <functional>
#include <thread>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"
#include "test_support.hpp"

namespace evenzeta {
namespace {

using testing::q;

// Values from the published list of A_k and translated P_k.
const char* const kPublishedA[] = {"1",          "1",           "10",
                                   "945",        "992250",      "13575766050",
                                   "2787683360962500", "9732664704199465153125"};

// Frozen from an independent exact-fraction implementation of the recursion.
const char* const kFrozenA9to15[] = {
    "645637377497133077322672656250",
    "899432544952401820816947980194174218750",
    "28818893358749342715855301032857212553407617187500",
    "23084806770746987779499763679142746279030584662748010253906250",
    "499274068204271308403480834040016485795199712070611107250026675415039062500",
    "313148105350689018044915137520011544614514258784051897477766935593106312775039672851562500",
    "6088667590610737553379111011392690604546348275406078777425539157320186607814235162091190814"
    "971923828125000",
};

TEST(FPolyTest, Examples) {
  EXPECT_EQ(f_poly(IndexSet(), 1), Polynomial{1});
  EXPECT_EQ(f_poly(IndexSet{1}, 2), (Polynomial{-1, 2}));
  EXPECT_EQ(f_poly(IndexSet{1, 2}, 3), (Polynomial{3, -8, 4}));
}

TEST(FPolyTest, CustomSequence) {
  const SequenceSpec seq({q(1, 2), 4});
  // (2x - 2 + 1/2)(2x - 2 + 4)
  EXPECT_EQ(f_poly(IndexSet{1, 2}, 1, seq),
            Polynomial::linear(2, q(-3, 2)) * Polynomial::linear(2, 2));
}

TEST(ApplyBkTest, FirstSteps) {
  EXPECT_EQ(apply_Bk(Polynomial{1}, 1), Polynomial{1});
  const Polynomial p3 = apply_Bk(Polynomial{1}, 2);
  EXPECT_EQ(p3.compose_affine(q(1, 2), q(3, 2)), (Polynomial{7, 1}));
  const Polynomial p4 = apply_Bk(p3, 3);
  EXPECT_EQ(p4.compose_affine(q(1, 2), q(5, 2)), (Polynomial{465, 130, 10}));
  EXPECT_THROW(apply_Bk(Polynomial{1}, 0), DomainError);
}

TEST(ComputePkTest, PublishedTranslatedForms) {
  EXPECT_EQ(compute_Pk(1).poly, Polynomial{1});
  EXPECT_EQ(translated_Pk(1, true), Polynomial{1});
  EXPECT_EQ(translated_Pk(2, true), Polynomial{1});
  EXPECT_EQ(translated_Pk(3, true), (Polynomial{7, 1}));
  EXPECT_EQ(translated_Pk(3), (Polynomial{7, 2}));
  EXPECT_EQ(translated_Pk(4, true), (Polynomial{465, 130, 10}));
  EXPECT_EQ(translated_Pk(5, true), (Polynomial{360045, 142695, 19845, 945}));
}

TEST(ComputePkTest, MonomialForms) {
  EXPECT_EQ(compute_Pk(3).poly, (Polynomial{4, 2}));
  EXPECT_EQ(compute_Pk(4).poly, (Polynomial{65, 60, 40}));
  EXPECT_EQ(compute_Pk(5).poly, (Polynomial{9450, 7560, 0, 7560}));
}

TEST(ComputePkTest, LeadingCoefficientOfP6) {
  EXPECT_EQ(compute_Pk(6).poly.leading(), Rational(BigInt(992250) * 16));
}

TEST(ComputeAkTest, PublishedSequence) {
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(compute_Ak(k).get_str(), kPublishedA[k - 1]) << "k=" << k;
  }
}

TEST(ComputeAkTest, FrozenLargerValues) {
  for (std::size_t k = 9; k <= 15; ++k) {
    EXPECT_EQ(compute_Ak(k).get_str(), kFrozenA9to15[k - 9]) << "k=" << k;
  }
}

TEST(ComputePkTest, DegreeAndPositivity) {
  for (std::size_t k = 2; k <= 15; ++k) {
    const Polynomial p = compute_Pk(k).poly;
    EXPECT_EQ(p.degree(), std::optional<std::size_t>(k - 2));
    const Polynomial translated = translated_Pk(k);
    for (const auto& c : translated.coeffs()) EXPECT_GT(c.sign(), 0) << "k=" << k;
  }
  EXPECT_THROW(compute_Pk(0), DomainError);
}

TEST(ComputePkTest, LeadingCoefficientLaw) {
  for (std::size_t k = 2; k <= 12; ++k) {
    EXPECT_EQ(compute_Pk(k).poly.leading(),
              Rational(compute_Ak(k - 1) * pow2(static_cast<unsigned>(k - 2))));
  }
}

TEST(PkEngineTest, ConcurrentCallersSeeTheSameValues) {
  PkEngine engine;
  std::vector<Polynomial> results(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
      threads.emplace_back([&, t] { results[t] = engine.pk(10 + t % 3); });
    }
  }
  for (std::size_t t = 0; t < results.size(); ++t) {
    EXPECT_EQ(results[t], compute_Pk(10 + t % 3).poly);
  }
}

TEST(BkExpandTest, EmptySetAtK2GivesP3) {
  const auto terms = bk_expand(IndexSet(), 2);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].low, IndexSet());
  EXPECT_EQ(assemble_bk_terms(terms, 2), compute_Pk(3).poly);
}

TEST(BkExpandTest, FirstTermIsShiftedSet) {
  for (std::size_t k = 2; k <= 8; ++k) {
    const IndexSet s = r_set(k - 2).smallest((k - 2) / 2);
    EXPECT_EQ(bk_expand(s, k).front().low, s.shifted());
  }
}

TEST(BkExpandTest, MatchesApplyBkForSingleton) {
  const IndexSet s{1};  // {3}
  EXPECT_EQ(assemble_bk_terms(bk_expand(s, 3), 3), apply_Bk(f_poly(s, 2), 3));
}

TEST(BkExpandTest, MatchesApplyBkForEverySubset) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const std::size_t n = k - 2;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<IndexSet::Index> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) idx.push_back(static_cast<IndexSet::Index>(i + 1));
      }
      const IndexSet s(idx);
      const auto terms = bk_expand(s, k);
      EXPECT_EQ(terms.size(), k - s.size());
      ASSERT_EQ(assemble_bk_terms(terms, k), apply_Bk(f_poly(s, k - 1), k))
          << "k=" << k << " S=" << s.to_value_string();
    }
  }
}

TEST(BkExpandTest, RejectsOutOfRangeSet) {
  EXPECT_THROW(bk_expand(IndexSet{2}, 3), DomainError);
  EXPECT_THROW(bk_expand(IndexSet(), 1), DomainError);
}

TEST(CoeffRecursionTest, SmallCases) {
  EXPECT_EQ(coeff_recursion(2), std::vector<Rational>{1});
  EXPECT_EQ(coeff_recursion(3), (std::vector<Rational>{5, 1}));
  EXPECT_EQ(coeff_recursion(5), (std::vector<Rational>{146475, 50085, 8505, 945}));
  EXPECT_THROW(coeff_recursion(1), DomainError);
}

TEST(CoeffRecursionTest, BasisExpansionReproducesPk) {
  for (std::size_t k = 2; k <= 12; ++k) {
    EXPECT_EQ(expand_coeff_basis(coeff_recursion(k), k), compute_Pk(k).poly) << "k=" << k;
  }
  const auto with_basis = compute_Pk(10, true);
  ASSERT_TRUE(with_basis.basis_coeffs.has_value());
  EXPECT_EQ(with_basis.basis_coeffs->size(), 9u);
}

TEST(CoeffRecursionTest, TopCoefficientIsPreviousA) {
  // c_{k-2,k} * 2^{k-2} is the leading coefficient A_{k-1} 2^{k-2}.
  for (std::size_t k = 2; k <= 12; ++k) {
    EXPECT_EQ(coeff_recursion(k).back(), Rational(compute_Ak(k - 1)));
  }
}

TEST(Lemma2niTest, Identity) {
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_TRUE(lemma_2ni_check(n)) << "n=" << n;
}

}  // namespace
}  // namespace evenzeta

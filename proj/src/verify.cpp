#include "evenzeta/verify.hpp"

#include <algorithm>
#include <random>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"
#include "evenzeta/symmetric.hpp"
#include "evenzeta/trees.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta {
namespace {

struct SuiteInfo {
  Suite suite;
  const char* name;
  std::size_t default_max;
  std::size_t bound;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::kNewtonGirard, "newton-girard", 8, 8},
    {Suite::kCycleIndex, "cycle-index", 8, 8},
    {Suite::kTrees, "trees", 10, kTreeSumBound},
    {Suite::kCoeffs, "coeffs", 12, 40},
    {Suite::kBernoulli, "bernoulli", 30, 200},
    {Suite::kFn, "fn", 8, 20},
    {Suite::kPositivity, "positivity", 15, 60},
    {Suite::kLeading, "leading", 12, 60},
    {Suite::kLemma2ni, "lemma-2ni", 10, 100},
};

const SuiteInfo& info(Suite suite) {
  for (const auto& s : kSuites) {
    if (s.suite == suite) return s;
  }
  throw DomainError("no single-suite info for 'all'");
}

constexpr std::size_t kRandomSetsPerSize = 100;
constexpr std::size_t kFullEnumerationSets = 3;

std::string str(std::size_t n) { return std::to_string(n); }

VariableSet random_variables(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return VariableSet(std::move(v));
}

std::string join(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].to_string();
  }
  return out + ")";
}

class Recorder {
 public:
  explicit Recorder(std::string suite, VerifyReport& report)
      : suite_(std::move(suite)), report_(report) {}

  Check& add(std::string name, bool passed) {
    report_.checks.push_back(Check{suite_, std::move(name), passed, false, {}});
    return report_.checks.back();
  }

 private:
  std::string suite_;
  VerifyReport& report_;
};

void newton_girard_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("newton-girard", report);
  for (std::size_t n = 1; n <= max_k; ++n) {
    std::mt19937_64 rng(0x6e67 + n);
    bool ok = true;
    Check* failure = nullptr;
    for (std::size_t trial = 0; trial < kRandomSetsPerSize && ok; ++trial) {
      const VariableSet vars = random_variables(rng, n);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto r = newton_girard_check(vars, k);
        if (!r.passed) {
          ok = false;
          failure = &rec.add("random sets N=" + str(n), false);
          failure->witness = {{"vars", join(vars.values())}, {"k", str(k)},
                              {"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}};
          break;
        }
      }
    }
    if (ok) rec.add("random sets N=" + str(n), true);
  }
  const VariableSet special = VariableSet::reciprocal_squares(12);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const auto r = newton_girard_check(special, k);
    auto& c = rec.add("z_n = 1/n^2, N=12, k=" + str(k), r.passed);
    if (!r.passed) c.witness = {{"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}};
  }
}

void cycle_index_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("cycle-index", report);
  for (std::size_t n = 1; n <= max_k; ++n) {
    std::mt19937_64 rng(0x6369 + n);
    bool ok = true;
    for (std::size_t trial = 0; trial < kRandomSetsPerSize && ok; ++trial) {
      const VariableSet vars = random_variables(rng, n);
      for (std::size_t k = 1; k <= n; ++k) {
        const Rational lhs = cycle_index_elementary(vars, k);
        const Rational rhs = elementary_symmetric(vars, k);
        if (lhs != rhs) {
          ok = false;
          rec.add("cycle types vs e_k, N=" + str(n), false).witness = {
              {"vars", join(vars.values())}, {"k", str(k)},
              {"cycle_index", lhs.to_string()}, {"e_k", rhs.to_string()}};
          break;
        }
      }
    }
    if (ok) rec.add("cycle types vs e_k, N=" + str(n), true);
  }
  // Full S_k enumeration against the cycle-type count.
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::mt19937_64 rng(0x7065 + k);
    bool ok = true;
    for (std::size_t trial = 0; trial < kFullEnumerationSets && ok; ++trial) {
      const VariableSet vars = random_variables(rng, k);
      const Rational by_type = cycle_index_elementary(vars, k, GroupEnumeration::kCycleType);
      const Rational by_perm = cycle_index_elementary(vars, k, GroupEnumeration::kAllPermutations);
      if (by_type != by_perm) {
        ok = false;
        rec.add("all permutations vs cycle types, k=" + str(k), false).witness = {
            {"vars", join(vars.values())}, {"cycle_types", by_type.to_string()},
            {"permutations", by_perm.to_string()}};
      }
    }
    if (ok) rec.add("all permutations vs cycle types, k=" + str(k), true);
  }
  {
    std::mt19937_64 rng(0x7367);
    bool ok = true;
    for (std::size_t trial = 0; trial < 200 && ok; ++trial) {
      const std::size_t k = 1 + trial % std::max<std::size_t>(max_k, 1);
      std::vector<std::size_t> a(k), b(k);
      for (std::size_t i = 0; i < k; ++i) a[i] = b[i] = i;
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation pa(a), pb(b);
      const Permutation ab = pa.compose(pb);
      ok = ab.sign() == pa.sign() * pb.sign() && pa.sign() == pa.parity_sign();
    }
    rec.add("sgn multiplicative under composition", ok);
  }
}

void trees_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("trees", report);
  for (std::size_t k = 2; k <= max_k; ++k) {
    const auto totals = fold_trees(k);
    const BigInt expected_count = catalan(k - 1);
    auto& count = rec.add("tree count = C_" + str(k - 1) + ", k=" + str(k),
                          totals.tree_count == expected_count);
    if (!count.passed) {
      count.witness = {{"count", totals.tree_count.get_str()},
                       {"catalan", expected_count.get_str()}};
    }
    Polynomial via_trees;
    BigInt ak = 0;
    for (const auto& [low, weight] : totals.weight_by_low) {
      via_trees += f_poly(low, k - 1) * Rational(weight);
      ak += weight * low.shifted().odd_product();
    }
    const Polynomial direct = compute_Pk(k).poly;
    auto& pk = rec.add("P_k via trees, k=" + str(k), via_trees == direct);
    if (!pk.passed) {
      pk.witness = {{"trees", via_trees.to_string()}, {"recursion", direct.to_string()}};
    }
    const BigInt direct_ak = compute_Ak(k);
    auto& a = rec.add("A_k via trees, k=" + str(k), ak == direct_ak);
    if (!a.passed) a.witness = {{"trees", ak.get_str()}, {"recursion", direct_ak.get_str()}};
  }
}

void coeffs_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("coeffs", report);
  bool all_integral = true;
  for (std::size_t k = 2; k <= max_k; ++k) {
    const auto c = coeff_recursion(k);
    const Polynomial expanded = expand_coeff_basis(c, k);
    const Polynomial direct = compute_Pk(k).poly;
    auto& chk = rec.add("basis expansion = P_k, k=" + str(k), expanded == direct);
    if (!chk.passed) {
      chk.witness = {{"expanded", expanded.to_string()}, {"recursion", direct.to_string()}};
    }
    all_integral = all_integral && std::all_of(c.begin(), c.end(),
                                               [](const Rational& r) { return r.is_integer(); });
  }
  auto& note = rec.add("c_{i,k} integral for k <= " + str(max_k), true);
  note.informational = true;
  note.witness = {{"all_integral", all_integral ? "true" : "false"}};
}

void bernoulli_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("bernoulli", report);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Rational via_pk = bernoulli_even(k);
    const Rational oracle = bernoulli_classical_oracle(2 * k);
    auto& c = rec.add("B_" + str(2 * k) + " recursion = classical", via_pk == oracle);
    if (!c.passed) c.witness = {{"recursion", via_pk.to_string()}, {"classical", oracle.to_string()}};
    const int expected_sign = (k % 2 == 1) ? 1 : -1;
    const bool signs = zeta_even_rational(k).coeff().sign() > 0 && via_pk.sign() == expected_sign;
    rec.add("sign pattern, k=" + str(k), signs);
  }
}

void fn_suite(std::size_t max_n, VerifyReport& report) {
  Recorder rec("fn", report);
  const std::size_t max_k = max_n + 2;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = n - 1; k <= max_k; ++k) {
      const PiMultiple partial = Fn_partial_sum(n, k);
      const PiMultiple closed = Fn_closed_form(n, k);
      auto& c = rec.add("F_" + str(n) + "(" + str(k) + ") partial sum = closed form",
                        partial == closed);
      if (!c.passed) c.witness = {{"partial", partial.to_string()}, {"closed", closed.to_string()}};
    }
    PiMultiple pbar = Fn_closed_form(n, n);
    if (n % 2 == 0) pbar = -pbar;
    const PiMultiple zeta = zeta_even_rational(n);
    auto& c = rec.add("(-1)^(n-1) F_n(n) = zeta(2n), n=" + str(n), pbar == zeta);
    if (!c.passed) c.witness = {{"F", pbar.to_string()}, {"zeta", zeta.to_string()}};
  }
}

void positivity_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("positivity", report);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Polynomial t = translated_Pk(k);
    const bool positive =
        !t.is_zero() && std::all_of(t.coeffs().begin(), t.coeffs().end(),
                                    [](const Rational& c) { return c.sign() > 0; });
    auto& c = rec.add("P_k(x+k-3/2) coefficients > 0, k=" + str(k), positive);
    if (!positive) c.witness = {{"translated", t.to_string()}};
  }
}

void leading_suite(std::size_t max_k, VerifyReport& report) {
  Recorder rec("leading", report);
  for (std::size_t k = 2; k <= max_k; ++k) {
    const Polynomial p = compute_Pk(k).poly;
    const BigInt expected = compute_Ak(k - 1) * pow2(static_cast<unsigned>(k - 2));
    const bool degree_ok = p.degree() == std::optional<std::size_t>(k - 2);
    auto& c = rec.add("lead(P_k) = A_{k-1} 2^{k-2}, k=" + str(k),
                      degree_ok && p.leading() == Rational(expected));
    if (!c.passed) {
      c.witness = {{"leading", p.leading().to_string()}, {"expected", expected.get_str()}};
    }
    if (k <= 12) {
      const BigInt via_trees = leading_coeff_via_trees(k);
      auto& t = rec.add("level-1 trees give lead(P_k), k=" + str(k), via_trees == expected);
      if (!t.passed) t.witness = {{"trees", via_trees.get_str()}, {"expected", expected.get_str()}};
    }
  }
}

void lemma_2ni_suite(std::size_t max_n, VerifyReport& report) {
  Recorder rec("lemma-2ni", report);
  for (std::size_t n = 0; n <= max_n; ++n) {
    rec.add("coefficientwise identity, n=" + str(n), lemma_2ni_check(n));
  }
}

void run_one(Suite suite, std::size_t max_k, VerifyReport& report) {
  switch (suite) {
    case Suite::kNewtonGirard: return newton_girard_suite(max_k, report);
    case Suite::kCycleIndex: return cycle_index_suite(max_k, report);
    case Suite::kTrees: return trees_suite(max_k, report);
    case Suite::kCoeffs: return coeffs_suite(max_k, report);
    case Suite::kBernoulli: return bernoulli_suite(max_k, report);
    case Suite::kFn: return fn_suite(max_k, report);
    case Suite::kPositivity: return positivity_suite(max_k, report);
    case Suite::kLeading: return leading_suite(max_k, report);
    case Suite::kLemma2ni: return lemma_2ni_suite(max_k, report);
    case Suite::kAll: break;
  }
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "all") return Suite::kAll;
  for (const auto& s : kSuites) {
    if (name == s.name) return s.suite;
  }
  return std::nullopt;
}

std::string suite_name(Suite suite) { return suite == Suite::kAll ? "all" : info(suite).name; }

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& s : kSuites) out.push_back(s.suite);
  return out;
}

std::size_t default_max_k(Suite suite) {
  return suite == Suite::kAll ? 0 : info(suite).default_max;
}

std::size_t max_k_bound(Suite suite) {
  if (suite != Suite::kAll) return info(suite).bound;
  std::size_t b = 0;
  for (const auto& s : kSuites) b = std::max(b, s.bound);
  return b;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.informational || c.passed; });
}

VerifyReport run_verify(Suite suite, std::optional<std::size_t> max_k) {
  VerifyReport report;
  if (suite == Suite::kAll) {
    for (const auto& s : kSuites) {
      run_one(s.suite, max_k ? std::min(*max_k, s.bound) : s.default_max, report);
    }
    return report;
  }
  const std::size_t limit = max_k.value_or(default_max_k(suite));
  if (limit > max_k_bound(suite)) {
    throw BoundError("--max-k " + str(limit) + " exceeds the " + suite_name(suite) +
                     " bound " + str(max_k_bound(suite)));
  }
  run_one(suite, limit, report);
  return report;
}

}  // namespace evenzeta

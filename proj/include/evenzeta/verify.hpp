#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evenzeta {

enum class Suite {
  kAll,
  kNewtonGirard,
  kCycleIndex,
  kTrees,
  kCoeffs,
  kBernoulli,
  kFn,
  kPositivity,
  kLeading,
  kLemma2ni,
};

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);
std::vector<Suite> all_suites();

/// max_k used when the caller gives none.
std::size_t default_max_k(Suite suite);
/// Largest accepted max_k.
std::size_t max_k_bound(Suite suite);

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Recorded observation, not counted towards pass/fail.
  bool informational = false;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// Runs one suite, or every suite for Suite::kAll (each clamped to its own
/// bound). Throws BoundError when max_k exceeds the suite bound. Failures
/// are reported in the checks, never thrown.
VerifyReport run_verify(Suite suite, std::optional<std::size_t> max_k = std::nullopt);

}  // namespace evenzeta

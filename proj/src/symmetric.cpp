#include "evenzeta/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "evenzeta/error.hpp"

namespace evenzeta {

VariableSet::VariableSet(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("variable set needs at least one variable");
}

VariableSet VariableSet::reciprocal_squares(std::size_t count) {
  std::vector<Rational> v;
  v.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    v.emplace_back(BigInt(1), BigInt(static_cast<unsigned long>(n * n)));
  }
  return VariableSet(std::move(v));
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw DomainError("not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = image_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles()) {
    if (c.size() % 2 == 0) s = -s;
  }
  return s;
}

int Permutation::parity_sign() const {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    for (std::size_t j = i + 1; j < image_.size(); ++j) {
      if (image_[i] > image_[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("composing permutations of different size");
  std::vector<std::size_t> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[i] = image_[other.image_[i]];
  return Permutation(std::move(image));
}

Rational elementary_symmetric(const VariableSet& vars, std::size_t k, bool allow_beyond_size) {
  if (k > vars.size()) {
    if (allow_beyond_size) return Rational();
    throw DomainError("e_" + std::to_string(k) + " requested over " +
                      std::to_string(vars.size()) + " variables");
  }
  // Coefficients of prod (1 + z_i t), truncated at t^k.
  std::vector<Rational> e(k + 1);
  e[0] = 1;
  std::size_t filled = 0;
  for (const auto& z : vars.values()) {
    filled = std::min(filled + 1, k);
    for (std::size_t j = filled; j >= 1; --j) e[j] += e[j - 1] * z;
  }
  return e[k];
}

Rational power_sum(const VariableSet& vars, std::size_t k) {
  if (k == 0) throw DomainError("power sum p_0 is undefined");
  Rational sum;
  for (const auto& z : vars.values()) {
    Rational term = 1;
    for (std::size_t i = 0; i < k; ++i) term *= z;
    sum += term;
  }
  return sum;
}

void for_each_cycle_type(std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> m(k + 1, 0);
  // Parts chosen in non-increasing order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining,
                                                           std::size_t max_part) {
    if (remaining == 0) {
      visit(m);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      ++m[part];
      rec(remaining - part, part);
      --m[part];
    }
  };
  rec(k, k);
}

BigInt cycle_type_count(const std::vector<std::size_t>& multiplicities) {
  std::size_t k = 0;
  BigInt denom = 1;
  for (std::size_t j = 1; j < multiplicities.size(); ++j) {
    const std::size_t mj = multiplicities[j];
    k += j * mj;
    denom *= factorial(static_cast<unsigned>(mj));
    for (std::size_t r = 0; r < mj; ++r) denom *= static_cast<unsigned long>(j);
  }
  return factorial(static_cast<unsigned>(k)) / denom;
}

Rational cycle_index_elementary(const VariableSet& vars, std::size_t k, GroupEnumeration mode,
                                std::size_t bound) {
  if (k > bound) {
    throw BoundError("cycle-index enumeration of S_" + std::to_string(k) +
                     " exceeds bound " + std::to_string(bound) +
                     "; use elementary_symmetric instead");
  }
  if (k == 0) return 1;
  std::vector<Rational> p(k + 1);
  for (std::size_t j = 1; j <= k; ++j) p[j] = power_sum(vars, j);

  Rational total;
  if (mode == GroupEnumeration::kCycleType) {
    for_each_cycle_type(k, [&](const std::vector<std::size_t>& m) {
      Rational term = Rational(cycle_type_count(m));
      int sign = 1;
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t r = 0; r < m[j]; ++r) {
          term *= p[j];
          if (j % 2 == 0) sign = -sign;
        }
      }
      total += sign > 0 ? term : -term;
    });
  } else {
    std::vector<std::size_t> image(k);
    std::iota(image.begin(), image.end(), std::size_t{0});
    do {
      const Permutation sigma(image);
      Rational term = 1;
      for (const auto& c : sigma.cycles()) term *= p[c.size()];
      total += sigma.sign() > 0 ? term : -term;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return total / Rational(factorial(static_cast<unsigned>(k)));
}

NewtonGirardResult newton_girard_check(const VariableSet& vars, std::size_t k) {
  if (k == 0 || k > vars.size()) {
    throw DomainError("Newton-Girard check needs 1 <= k <= N");
  }
  std::vector<Rational> e(k + 1);
  std::vector<Rational> p(k + 1);
  for (std::size_t j = 0; j <= k; ++j) e[j] = elementary_symmetric(vars, j);
  for (std::size_t j = 1; j <= k; ++j) p[j] = power_sum(vars, j);

  NewtonGirardResult r;
  r.lhs = (k % 2 == 1) ? p[k] : -p[k];
  r.rhs = Rational(static_cast<unsigned long>(k)) * e[k];
  for (std::size_t i = 1; i < k; ++i) {
    Rational term = e[k - i] * p[i];
    if (i % 2 == 1) {
      r.rhs -= term;
    } else {
      r.rhs += term;
    }
  }
  r.passed = r.lhs == r.rhs;
  return r;
}

}  // namespace evenzeta

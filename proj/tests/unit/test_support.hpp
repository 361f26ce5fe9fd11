#pragma once

#include <random>
#include <vector>

#include "evenzeta/polynomial.hpp"
#include "evenzeta/rational.hpp"

namespace evenzeta::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 50, long max_den = 30) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t max_degree = 6) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Polynomial(std::move(c));
}

inline Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace evenzeta::testing

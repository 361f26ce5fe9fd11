#include "evenzeta/index_set.hpp"

#include <algorithm>
#include <iterator>

#include "evenzeta/error.hpp"

namespace evenzeta {

IndexSet::IndexSet(std::vector<Index> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] == 0) throw DomainError("index sets hold indices >= 1");
    if (i > 0 && indices_[i - 1] >= indices_[i]) {
      throw DomainError("index set must be strictly increasing");
    }
  }
}

IndexSet::IndexSet(std::initializer_list<Index> indices)
    : IndexSet(std::vector<Index>(indices)) {}

IndexSet IndexSet::range(Index first, Index last) {
  IndexSet s;
  for (Index n = first; n <= last && n >= first; ++n) s.indices_.push_back(n);
  return s;
}

bool IndexSet::contains(Index n) const {
  return std::binary_search(indices_.begin(), indices_.end(), n);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

IndexSet IndexSet::shifted() const {
  IndexSet s = *this;
  for (auto& n : s.indices_) ++n;
  return s;
}

IndexSet IndexSet::united(const IndexSet& other) const {
  IndexSet s;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(s.indices_));
  return s;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  IndexSet s;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(s.indices_));
  return s;
}

IndexSet IndexSet::smallest(std::size_t count) const {
  if (count > indices_.size()) throw DomainError("smallest: not enough elements");
  IndexSet s;
  s.indices_.assign(indices_.begin(), indices_.begin() + static_cast<std::ptrdiff_t>(count));
  return s;
}

IndexSet IndexSet::greatest(std::size_t count) const {
  if (count > indices_.size()) throw DomainError("greatest: not enough elements");
  IndexSet s;
  s.indices_.assign(indices_.end() - static_cast<std::ptrdiff_t>(count), indices_.end());
  return s;
}

Rational IndexSet::product(const SequenceSpec& seq) const {
  if (seq.is_default()) return Rational(odd_product());
  Rational r = 1;
  for (Index n : indices_) r *= seq.value(n);
  return r;
}

BigInt IndexSet::odd_product() const {
  BigInt r = 1;
  for (Index n : indices_) r *= SequenceSpec::odd_value(n);
  return r;
}

std::vector<unsigned long> IndexSet::odd_values() const {
  std::vector<unsigned long> out;
  out.reserve(indices_.size());
  for (Index n : indices_) out.push_back(SequenceSpec::odd_value(n));
  return out;
}

std::string IndexSet::to_value_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(SequenceSpec::odd_value(indices_[i]));
  }
  return out + "}";
}

IndexSet r_set(std::size_t k) { return IndexSet::range(1, static_cast<IndexSet::Index>(k)); }

}  // namespace evenzeta

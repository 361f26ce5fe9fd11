#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "evenzeta/rational.hpp"
#include "evenzeta/sequence.hpp"

namespace evenzeta {

/// Finite set of positions into a SequenceSpec. Index n stands for R_n, so
/// with the odd sequence R(k) = {1..k} denotes {3, 5, ..., 2k+1} and the
/// value shift S+2 is the index shift n -> n+1.
class IndexSet {
 public:
  using Index = std::uint32_t;

  IndexSet() = default;
  /// Throws DomainError unless strictly increasing with all indices >= 1.
  explicit IndexSet(std::vector<Index> indices);
  IndexSet(std::initializer_list<Index> indices);

  /// Indices first..last inclusive; empty when last < first.
  static IndexSet range(Index first, Index last);

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index n) const;
  bool is_subset_of(const IndexSet& other) const;

  /// S + 2 in value terms.
  IndexSet shifted() const;
  IndexSet united(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  /// The count smallest / greatest members.
  IndexSet smallest(std::size_t count) const;
  IndexSet greatest(std::size_t count) const;

  /// prod_{n in S} R_n; 1 for the empty set.
  Rational product(const SequenceSpec& seq) const;
  /// prod_{n in S} (2n+1).
  BigInt odd_product() const;

  /// Values under the odd sequence, e.g. "{3,5,9}".
  std::string to_value_string() const;
  std::vector<unsigned long> odd_values() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Index> indices_;
};

/// R(k) = {3, 5, ..., 2k+1}, i.e. indices 1..k; empty for k == 0.
IndexSet r_set(std::size_t k);

}  // namespace evenzeta

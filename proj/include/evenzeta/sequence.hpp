#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <vector>

#include "evenzeta/rational.hpp"

namespace evenzeta {

/// The sequence R_1, R_2, ... that index sets point into. The default is the
/// odd sequence R_n = 2n + 1; a custom sequence is a finite list of nonzero
/// rationals.
class SequenceSpec {
 public:
  /// R_n = 2n + 1.
  SequenceSpec() = default;
  /// values[n-1] is R_n. Throws InputError on a zero entry.
  explicit SequenceSpec(std::vector<Rational> values);

  static SequenceSpec odd() { return {}; }
  /// One canonical Rational per line; line n is R_n. Blank trailing lines are
  /// ignored. Errors name the offending line.
  static SequenceSpec parse(std::istream& in);
  static SequenceSpec from_file(const std::filesystem::path& path);

  bool is_default() const { return !values_.has_value(); }
  /// Number of defined terms; nullopt for the unbounded default.
  std::optional<std::size_t> length() const;

  /// R_n for n >= 1. Throws InputError when n is out of range.
  Rational value(std::size_t n) const;
  /// R_n for the default sequence, as an integer.
  static unsigned long odd_value(std::size_t n) { return 2 * n + 1; }

  /// Throws InputError unless R_1..R_n are all defined.
  void require(std::size_t n) const;

 private:
  std::optional<std::vector<Rational>> values_;
};

}  // namespace evenzeta

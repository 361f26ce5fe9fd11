#include "evenzeta/sequence.hpp"

#include <fstream>
#include <string>

#include "evenzeta/error.hpp"

namespace evenzeta {

SequenceSpec::SequenceSpec(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_->size(); ++i) {
    if ((*values_)[i].is_zero()) {
      throw InputError("sequence term R_" + std::to_string(i + 1) + " is zero");
    }
  }
}

SequenceSpec SequenceSpec::parse(std::istream& in) {
  std::vector<Rational> values;
  std::string line;
  std::size_t lineno = 0;
  std::size_t blank_run = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      ++blank_run;
      continue;
    }
    if (blank_run > 0) {
      throw InputError("line " + std::to_string(lineno - blank_run) +
                       ": blank line inside sequence");
    }
    Rational r;
    try {
      r = Rational::parse(line);
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (r.is_zero()) throw InputError("line " + std::to_string(lineno) + ": term is zero");
    values.push_back(std::move(r));
  }
  if (values.empty()) throw InputError("sequence file has no terms");
  return SequenceSpec(std::move(values));
}

SequenceSpec SequenceSpec::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sequence file " + path.string());
  return parse(in);
}

std::optional<std::size_t> SequenceSpec::length() const {
  if (!values_) return std::nullopt;
  return values_->size();
}

Rational SequenceSpec::value(std::size_t n) const {
  if (n == 0) throw InputError("sequence index starts at 1");
  if (!values_) return Rational(odd_value(n));
  if (n > values_->size()) {
    throw InputError("sequence has " + std::to_string(values_->size()) + " terms, R_" +
                     std::to_string(n) + " requested");
  }
  return (*values_)[n - 1];
}

void SequenceSpec::require(std::size_t n) const {
  if (values_ && values_->size() < n) {
    throw InputError("sequence needs at least " + std::to_string(n) + " terms, has " +
                     std::to_string(values_->size()));
  }
}

}  // namespace evenzeta

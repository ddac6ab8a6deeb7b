#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mirk/bitstring.hpp"

namespace mirk {

struct WeightedString {
  BitString bits;
  std::int64_t multiplicity = 1;
};

/// A multiset of equal-length binary strings, stored as distinct strings with
/// positive multiplicities, plus an optional decision budget.
class MirkinInstance {
 public:
  /// Duplicate strings in the input list are merged by summing multiplicities;
  /// first-occurrence order is preserved.
  explicit MirkinInstance(std::vector<WeightedString> strings,
                          std::optional<std::int64_t> budget = std::nullopt);

  /// Common string length n.
  std::size_t length() const { return n_; }

  /// Multiplicity-weighted number of strings.
  std::int64_t total_weight() const { return total_weight_; }

  const std::vector<WeightedString>& strings() const { return strings_; }

  std::optional<std::int64_t> budget() const { return budget_; }
  void set_budget(std::optional<std::int64_t> budget);

 private:
  std::vector<WeightedString> strings_;
  std::size_t n_;
  std::int64_t total_weight_;
  std::optional<std::int64_t> budget_;
};

/// Multiplicity-weighted sum of mirkin_pair(candidate, s) over the instance.
std::int64_t mirkin_total(const BitString& candidate, const MirkinInstance& inst);

/// Instance file format: optional 'c ...' comments, a 'p mirk <n> <lines>'
/// header, an optional 'k <budget>' line, then one '<bits> [multiplicity]'
/// line per distinct string. LF endings, ASCII only.
MirkinInstance parse_mirk(std::istream& in);
std::string write_mirk(const MirkinInstance& inst);

}  // namespace mirk

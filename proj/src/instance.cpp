#include "mirk/instance.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "mirk/checked.hpp"

namespace mirk {

MirkinInstance::MirkinInstance(std::vector<WeightedString> strings,
                               std::optional<std::int64_t> budget)
    : budget_(budget) {
  if (strings.empty()) throw InvalidParameterError("instance needs at least one string");
  n_ = strings.front().bits.size();
  total_weight_ = 0;
  std::map<std::string, std::size_t> index;
  for (auto& ws : strings) {
    if (ws.bits.size() != n_) throw LengthMismatchError(n_, ws.bits.size());
    if (ws.multiplicity < 1) throw InvalidParameterError("multiplicity must be positive");
    total_weight_ = checked_add(total_weight_, ws.multiplicity, "total weight");
    auto [it, fresh] = index.emplace(ws.bits.str(), strings_.size());
    if (fresh)
      strings_.push_back(std::move(ws));
    else
      strings_[it->second].multiplicity =
          checked_add(strings_[it->second].multiplicity, ws.multiplicity, "multiplicity");
  }
  if (budget_ && *budget_ < 0) throw InvalidParameterError("budget must be nonnegative");
}

void MirkinInstance::set_budget(std::optional<std::int64_t> budget) {
  if (budget && *budget < 0) throw InvalidParameterError("budget must be nonnegative");
  budget_ = budget;
}

std::int64_t mirkin_total(const BitString& candidate, const MirkinInstance& inst) {
  if (candidate.size() != inst.length())
    throw LengthMismatchError(candidate.size(), inst.length());
  std::int64_t total = 0;
  for (const auto& ws : inst.strings()) {
    const std::int64_t part =
        checked_mul(ws.multiplicity, mirkin_pair(candidate, ws.bits), "weighted distance");
    total = checked_add(total, part, "distance sum");
  }
  return total;
}

MirkinInstance parse_mirk(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, expected_lines = 0;
  std::optional<std::int64_t> budget;
  std::vector<WeightedString> strings;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, kind;
      if (!(ls >> p >> kind >> n >> expected_lines) || p != "p" || kind != "mirk" || n < 1)
        throw ParseError(lineno, "expected header 'p mirk <n> <lines>'");
      have_header = true;
      continue;
    }
    if (line[0] == 'k') {
      std::string key;
      std::int64_t k;
      if (!(ls >> key >> k) || key != "k" || k < 0)
        throw ParseError(lineno, "expected 'k <nonnegative budget>'");
      if (budget) throw ParseError(lineno, "duplicate budget line");
      budget = k;
      continue;
    }
    std::string bits;
    std::int64_t mult = 1;
    ls >> bits;
    if (!(ls >> mult)) mult = 1;
    if (mult < 1) throw ParseError(lineno, "multiplicity must be positive");
    try {
      BitString s = BitString::parse(bits);
      if (s.size() != n)
        throw ParseError(lineno, "string length " + std::to_string(s.size()) +
                                     " does not match header n=" + std::to_string(n));
      strings.push_back({std::move(s), mult});
    } catch (const InvalidParameterError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p mirk' header");
  if (strings.size() != expected_lines)
    throw ParseError(lineno, "header announced " + std::to_string(expected_lines) +
                                 " strings but file has " + std::to_string(strings.size()));
  try {
    return MirkinInstance(std::move(strings), budget);
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string write_mirk(const MirkinInstance& inst) {
  std::ostringstream out;
  out << "p mirk " << inst.length() << ' ' << inst.strings().size() << '\n';
  if (inst.budget()) out << "k " << *inst.budget() << '\n';
  for (const auto& ws : inst.strings()) {
    out << ws.bits.str();
    if (ws.multiplicity != 1) out << ' ' << ws.multiplicity;
    out << '\n';
  }
  return out.str();
}

}  // namespace mirk

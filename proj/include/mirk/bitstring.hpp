#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mirk/errors.hpp"

namespace mirk {

/// Fixed-length binary string, bit-packed into 64-bit words.
///
/// Positions are 1-indexed in the public interface. Position p lives at bit
/// (p-1) % 64 of word (p-1) / 64, so position 1 is the lowest bit of the
/// first word. Length is at least 1 and immutable after construction.
class BitString {
 public:
  /// All-zero string of length n (n >= 1).
  explicit BitString(std::size_t n);

  /// Parses an ASCII '0'/'1' sequence, position 1 first.
  static BitString parse(std::string_view text);

  std::size_t size() const { return n_; }

  /// Bit at 1-indexed position pos.
  bool get(std::size_t pos) const {
    check_pos(pos);
    return (words_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1u;
  }

  BitString& set(std::size_t pos, bool value) {
    check_pos(pos);
    const std::uint64_t bit = std::uint64_t{1} << ((pos - 1) & 63);
    if (value)
      words_[(pos - 1) >> 6] |= bit;
    else
      words_[(pos - 1) >> 6] &= ~bit;
    return *this;
  }

  /// Bitwise negation.
  BitString complement() const;

  /// this followed by other; |result| = |this| + |other|.
  BitString concat(const BitString& other) const;

  /// Inserts frag before 1-indexed position pos (pos may be size()+1 to append).
  BitString insert(const BitString& frag, std::size_t pos) const;

  /// Removes count positions starting at 1-indexed pos; the remainder must be nonempty.
  BitString erase(std::size_t pos, std::size_t count) const;

  /// ASCII rendering, position 1 first.
  std::string str() const;

  /// Lexicographic comparison by position (position 1 most significant).
  /// Both strings must have equal length.
  bool lex_less(const BitString& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void check_pos(std::size_t pos) const {
    if (pos < 1 || pos > n_) throw PositionOutOfRangeError(pos, n_);
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;  // trailing bits of the last word are zero
};

/// Number of positions where s and t differ. Lengths must match.
std::int64_t hamming(const BitString& s, const BitString& t);

/// Pairwise-disagreement distance d * (n - d) with d = hamming(s, t):
/// the number of position pairs {i, j} on which exactly one of s, t assigns
/// equal values to i and j.
std::int64_t mirkin_pair(const BitString& s, const BitString& t);

}  // namespace mirk

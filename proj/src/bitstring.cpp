#include "mirk/bitstring.hpp"

#include <bit>

#include "mirk/checked.hpp"

namespace mirk {

namespace {
constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

BitString::BitString(std::size_t n) : n_(n), words_(words_for(n), 0) {
  if (n == 0) throw InvalidParameterError("bit string length must be at least 1");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) throw InvalidParameterError("empty bit string");
  BitString s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      s.set(i + 1, true);
    else if (text[i] != '0')
      throw InvalidParameterError("invalid character '" + std::string(1, text[i]) +
                                  "' in bit string");
  }
  return s;
}

BitString BitString::complement() const {
  BitString out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  const std::size_t tail = n_ & 63;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

BitString BitString::concat(const BitString& other) const {
  BitString out(n_ + other.n_);
  out.words_ = words_;
  out.words_.resize(words_for(out.n_), 0);
  for (std::size_t i = 1; i <= other.n_; ++i)
    if (other.get(i)) out.set(n_ + i, true);
  return out;
}

BitString BitString::insert(const BitString& frag, std::size_t pos) const {
  if (pos < 1 || pos > n_ + 1) throw PositionOutOfRangeError(pos, n_ + 1);
  BitString out(n_ + frag.n_);
  for (std::size_t i = 1; i < pos; ++i) out.set(i, get(i));
  for (std::size_t i = 1; i <= frag.n_; ++i) out.set(pos - 1 + i, frag.get(i));
  for (std::size_t i = pos; i <= n_; ++i) out.set(frag.n_ + i, get(i));
  return out;
}

BitString BitString::erase(std::size_t pos, std::size_t count) const {
  if (pos < 1 || pos + count - 1 > n_) throw PositionOutOfRangeError(pos + count - 1, n_);
  if (count >= n_) throw InvalidParameterError("erase would leave an empty string");
  BitString out(n_ - count);
  std::size_t o = 0;
  for (std::size_t i = 1; i <= n_; ++i) {
    if (i >= pos && i < pos + count) continue;
    out.set(++o, get(i));
  }
  return out;
}

std::string BitString::str() const {
  std::string out(n_, '0');
  for (std::size_t i = 1; i <= n_; ++i)
    if (get(i)) out[i - 1] = '1';
  return out;
}

bool BitString::lex_less(const BitString& other) const {
  if (n_ != other.n_) throw LengthMismatchError(n_, other.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    // The lowest differing bit is the earliest differing position.
    return (words_[w] & (diff & ~(diff - 1))) == 0;
  }
  return false;
}

std::int64_t hamming(const BitString& s, const BitString& t) {
  if (s.size() != t.size()) throw LengthMismatchError(s.size(), t.size());
  std::int64_t d = 0;
  const auto sw = s.words();
  const auto tw = t.words();
  for (std::size_t w = 0; w < sw.size(); ++w) d += std::popcount(sw[w] ^ tw[w]);
  return d;
}

std::int64_t mirkin_pair(const BitString& s, const BitString& t) {
  const std::int64_t d = hamming(s, t);
  return checked_mul(d, static_cast<std::int64_t>(s.size()) - d, "pair distance");
}

}  // namespace mirk

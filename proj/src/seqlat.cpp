#include "gtutte/seqlat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gtutte {

namespace {

std::uint64_t low_mask(int len) { return len >= 64 ? ~0ULL : ((1ULL << len) - 1); }

void require_same_space(const BitSeq& s, const BitSeq& t) {
  if (s.size() != t.size() || s.weight() != t.weight()) {
    throw std::domain_error("sequences " + s.str() + " and " + t.str() +
                            " do not lie in the same S(n,r)");
  }
}

BitSeq from_prefix_weights(const std::vector<int>& w) {
  std::vector<int> bits;
  bits.reserve(w.size() - 1);
  for (std::size_t i = 1; i < w.size(); ++i) bits.push_back(w[i] - w[i - 1]);
  return BitSeq::from_bits(bits);
}

// Run-length encoding as (digit, length) pairs.
std::vector<std::pair<int, int>> runs(const BitSeq& s) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= s.size(); ++i) {
    if (!out.empty() && out.back().first == s.bit(i)) {
      ++out.back().second;
    } else {
      out.emplace_back(s.bit(i), 1);
    }
  }
  return out;
}

// Exponents of `first^a (1-first)^b first^c (1-first)^d`, if s has that shape.
std::optional<std::array<int, 4>> four_block_form(const BitSeq& s, int first) {
  auto rs = runs(s);
  std::array<int, 4> exps{0, 0, 0, 0};
  std::size_t slot = 0;
  for (const auto& [digit, len] : rs) {
    // Advance to the next slot carrying this digit.
    while (slot < 4 && ((slot % 2 == 0) ? first : 1 - first) != digit) ++slot;
    if (slot >= 4) return std::nullopt;
    exps[slot] = len;
    ++slot;
  }
  return exps;
}

void collect_leaves(const BitSeq& u, DescentPolicy policy, long mult, SeqMultiset& out) {
  const auto ds = descents(u);
  if (ds.empty()) {
    out[u] += mult;
    return;
  }
  const int i = policy == DescentPolicy::Leftmost ? ds.front() : ds.back();
  // u = u1 1 0 u2 with the '1' at position i-1 and the '0' at position i.
  collect_leaves(u.erase(i), policy, mult, out);      // u1 1 u2
  collect_leaves(u.erase(i - 1), policy, mult, out);  // u1 0 u2
}

}  // namespace

BitSeq BitSeq::from_bits(std::span<const int> bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("bit sequence longer than " + std::to_string(kMaxLength));
  }
  std::uint64_t v = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("bit sequence entry " + std::to_string(b) + " is not 0 or 1");
    }
    v = (v << 1) | static_cast<std::uint64_t>(b);
  }
  return BitSeq(v, static_cast<int>(bits.size()));
}

BitSeq BitSeq::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("bit string longer than " + std::to_string(kMaxLength));
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("invalid bit string '" + std::string(text) + "'");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitSeq(v, static_cast<int>(text.size()));
}

BitSeq BitSeq::from_value(std::uint64_t value, int length) {
  if (length < 0 || length > kMaxLength || (value & ~low_mask(length)) != 0) {
    throw std::invalid_argument("value does not fit the requested length");
  }
  return BitSeq(value, length);
}

BitSeq BitSeq::block(int bit, int count) {
  if (count < 0 || count > kMaxLength || (bit != 0 && bit != 1)) {
    throw std::invalid_argument("invalid block");
  }
  return BitSeq(bit == 1 ? low_mask(count) : 0, count);
}

int BitSeq::weight() const { return std::popcount(value_); }

std::vector<int> BitSeq::ones() const {
  std::vector<int> out;
  for (int i = 1; i <= length_; ++i) {
    if (bit(i)) out.push_back(i);
  }
  return out;
}

BitSeq BitSeq::slice(int pos, int len) const {
  if (pos < 1 || len < 0 || pos - 1 + len > length_) throw std::out_of_range("slice out of range");
  const int shift = length_ - (pos - 1) - len;
  return BitSeq((value_ >> shift) & low_mask(len), len);
}

BitSeq BitSeq::erase(int pos) const {
  if (pos < 1 || pos > length_) throw std::out_of_range("erase position out of range");
  return slice(1, pos - 1) + slice(pos + 1, length_ - pos);
}

BitSeq BitSeq::swap_adjacent(int pos) const {
  if (pos < 1 || pos + 1 > length_) throw std::out_of_range("swap position out of range");
  if (bit(pos) == bit(pos + 1)) return *this;
  const std::uint64_t flip = 3ULL << (length_ - pos - 1);
  return BitSeq(value_ ^ flip, length_);
}

std::string BitSeq::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i) {
    if (bit(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

BitSeq operator+(const BitSeq& a, const BitSeq& b) {
  if (a.length_ + b.length_ > BitSeq::kMaxLength) {
    throw std::invalid_argument("concatenation longer than " + std::to_string(BitSeq::kMaxLength));
  }
  return BitSeq((a.value_ << b.length_) | b.value_, a.length_ + b.length_);
}

std::vector<int> prefix_weights(const BitSeq& s) {
  std::vector<int> w(static_cast<std::size_t>(s.size()) + 1, 0);
  for (int m = 1; m <= s.size(); ++m) w[m] = w[m - 1] + s.bit(m);
  return w;
}

bool dominates(const BitSeq& s, const BitSeq& t) {
  require_same_space(s, t);
  int ws = 0;
  int wt = 0;
  for (int m = 1; m <= s.size(); ++m) {
    ws += s.bit(m);
    wt += t.bit(m);
    if (ws < wt) return false;
  }
  return true;
}

BitSeq join(const BitSeq& s, const BitSeq& t) {
  require_same_space(s, t);
  auto ws = prefix_weights(s);
  const auto wt = prefix_weights(t);
  for (std::size_t i = 0; i < ws.size(); ++i) ws[i] = std::max(ws[i], wt[i]);
  return from_prefix_weights(ws);
}

BitSeq meet(const BitSeq& s, const BitSeq& t) {
  require_same_space(s, t);
  auto ws = prefix_weights(s);
  const auto wt = prefix_weights(t);
  for (std::size_t i = 0; i < ws.size(); ++i) ws[i] = std::min(ws[i], wt[i]);
  return from_prefix_weights(ws);
}

bool covers(const BitSeq& s, const BitSeq& t) {
  require_same_space(s, t);
  const std::uint64_t diff = s.value() ^ t.value();
  if (std::popcount(diff) != 2) return false;
  for (int i = 1; i < s.size(); ++i) {
    if (s.bit(i) == 1 && s.bit(i + 1) == 0 && t.bit(i) == 0 && t.bit(i + 1) == 1) {
      return t.swap_adjacent(i) == s;
    }
  }
  return false;
}

std::vector<int> descents(const BitSeq& s) {
  std::vector<int> out;
  for (int i = 2; i <= s.size(); ++i) {
    if (s.bit(i - 1) == 1 && s.bit(i) == 0) out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const BitSeq& s) {
  std::vector<int> out;
  for (int i = 2; i <= s.size(); ++i) {
    if (s.bit(i - 1) == 0 && s.bit(i) == 1) out.push_back(i);
  }
  return out;
}

IrreducibleKind classify_irreducible(const BitSeq& s) {
  IrreducibleKind out;
  if (descents(s).size() <= 1) out.join_form = four_block_form(s, 0);
  if (ascents(s).size() <= 1) out.meet_form = four_block_form(s, 1);
  if (out.join_form && out.meet_form) {
    out.kind = Irreducibility::Both;
  } else if (out.join_form) {
    out.kind = Irreducibility::JoinIrreducible;
  } else if (out.meet_form) {
    out.kind = Irreducibility::MeetIrreducible;
  }
  return out;
}

bool is_join_irreducible(const BitSeq& s) { return descents(s).size() <= 1; }

bool is_meet_irreducible(const BitSeq& s) { return ascents(s).size() <= 1; }

BitSeq join_irreducible(int a, int b, int c, int d) {
  return BitSeq::block(0, a) + BitSeq::block(1, b) + BitSeq::block(0, c) + BitSeq::block(1, d);
}

BitSeq meet_irreducible(int a, int b, int c, int d) {
  return BitSeq::block(1, a) + BitSeq::block(0, b) + BitSeq::block(1, c) + BitSeq::block(0, d);
}

std::vector<BitSeq> enumerate(int n, int r) {
  if (r < 0 || n < 0 || r > n || n > BitSeq::kMaxLength) {
    throw std::domain_error("enumerate requires 0 <= r <= n");
  }
  std::vector<BitSeq> out;
  if (r == 0) {
    out.push_back(BitSeq::block(0, n));
    return out;
  }
  // Gosper's hack walks r-subsets of bit positions in increasing numeric order.
  std::uint64_t v = low_mask(r);
  const std::uint64_t limit = (n == 64) ? ~0ULL : (1ULL << n);
  while (v < limit) {
    out.push_back(BitSeq::from_value(v, n));
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t rr = v + c;
    if (rr == 0) break;
    v = (((rr ^ v) >> 2) / c) | rr;
  }
  return out;
}

std::vector<BitSeq> enumerate_join_irr(int n, int r) {
  std::vector<BitSeq> out;
  for (const auto& s : enumerate(n, r)) {
    if (is_join_irreducible(s)) out.push_back(s);
  }
  return out;
}

std::vector<BitSeq> enumerate_meet_irr(int n, int r) {
  std::vector<BitSeq> out;
  for (const auto& s : enumerate(n, r)) {
    if (is_meet_irreducible(s)) out.push_back(s);
  }
  return out;
}

BitSeq Interval2::top() const {
  return prefix + BitSeq::parse("10") + middle + BitSeq::parse("10") + suffix;
}
BitSeq Interval2::right() const {
  return prefix + BitSeq::parse("10") + middle + BitSeq::parse("01") + suffix;
}
BitSeq Interval2::left() const {
  return prefix + BitSeq::parse("01") + middle + BitSeq::parse("10") + suffix;
}
BitSeq Interval2::bottom() const {
  return prefix + BitSeq::parse("01") + middle + BitSeq::parse("01") + suffix;
}

std::vector<Interval2> height2_intervals(int n, int r) {
  std::vector<Interval2> out;
  if (n < 4 || r < 2 || n - r < 2) return out;
  std::vector<std::array<BitSeq, 4>> seen;
  for (const auto& top : enumerate(n, r)) {
    for (int p = 1; p + 3 <= n; ++p) {
      if (top.bit(p) != 1 || top.bit(p + 1) != 0) continue;
      for (int q = p + 2; q + 1 <= n; ++q) {
        if (top.bit(q) != 1 || top.bit(q + 1) != 0) continue;
        Interval2 iv{top.slice(1, p - 1), top.slice(p + 2, q - p - 2), top.slice(q + 2, n - q - 1)};
        std::array<BitSeq, 4> corners{iv.top(), iv.right(), iv.left(), iv.bottom()};
        // Distinct swap positions always give distinct corner sets; the guard
        // keeps the list duplicate-free regardless.
        if (std::find(seen.begin(), seen.end(), corners) != seen.end()) continue;
        seen.push_back(corners);
        out.push_back(iv);
      }
    }
  }
  return out;
}

SeqMultiset descent_leaves(const BitSeq& u, DescentPolicy policy) {
  SeqMultiset out;
  collect_leaves(u, policy, 1, out);
  return out;
}

}  // namespace gtutte

#pragma once

// Bit sequences and the dominance lattice S(n,r).
//
// A BitSeq is a word over {0,1}. Positions are 1-indexed from the left.
// Sequences of equal length are ordered lexicographically (0 < 1); on S(n,r)
// this canonical order is a linear extension of dominance, so iterating it
// ascending never visits s before t when t ⊴ s.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtutte {

class BitSeq {
 public:
  static constexpr int kMaxLength = 63;

  BitSeq() = default;

  /// Throws std::invalid_argument if an entry is not 0 or 1.
  static BitSeq from_bits(std::span<const int> bits);
  /// Accepts only the characters '0' and '1'.
  static BitSeq parse(std::string_view text);
  /// `value` read most-significant-bit first: bit 1 is the leftmost digit.
  static BitSeq from_value(std::uint64_t value, int length);
  /// `count` copies of `bit`.
  static BitSeq block(int bit, int count);

  int size() const { return length_; }
  int weight() const;
  int zeros() const { return length_ - weight(); }
  bool empty() const { return length_ == 0; }

  /// Digit at 1-indexed position `pos`.
  int bit(int pos) const { return static_cast<int>((value_ >> (length_ - pos)) & 1U); }
  std::uint64_t value() const { return value_; }

  /// Positions of the 1s, ascending.
  std::vector<int> ones() const;
  /// Contiguous piece starting at 1-indexed `pos` of length `len`.
  BitSeq slice(int pos, int len) const;
  /// Copy with position `pos` removed.
  BitSeq erase(int pos) const;
  /// Copy with digits at `pos` and `pos+1` swapped.
  BitSeq swap_adjacent(int pos) const;

  std::string str() const;

  friend BitSeq operator+(const BitSeq& a, const BitSeq& b);
  friend auto operator<=>(const BitSeq&, const BitSeq&) = default;
  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  BitSeq(std::uint64_t value, int length) : length_(length), value_(value) {}

  // Declaration order fixes the canonical order: by length, then lexicographic.
  int length_ = 0;
  std::uint64_t value_ = 0;
};

/// Entry m is the number of 1s among the first m digits (m = 0..n).
std::vector<int> prefix_weights(const BitSeq& s);

/// s ⊵ t. Throws std::domain_error unless s and t lie in the same S(n,r).
bool dominates(const BitSeq& s, const BitSeq& t);
BitSeq join(const BitSeq& s, const BitSeq& t);
BitSeq meet(const BitSeq& s, const BitSeq& t);
/// s = u 10 v and t = u 01 v for some u, v.
bool covers(const BitSeq& s, const BitSeq& t);

/// Positions i >= 2 with digits (i-1, i) = (1, 0).
std::vector<int> descents(const BitSeq& s);
/// Positions i >= 2 with digits (i-1, i) = (0, 1).
std::vector<int> ascents(const BitSeq& s);

enum class Irreducibility { JoinIrreducible, MeetIrreducible, Both, Neither };

struct IrreducibleKind {
  Irreducibility kind = Irreducibility::Neither;
  /// Exponents (a,b,c,d) with s = 0^a 1^b 0^c 1^d, when s has at most one descent.
  std::optional<std::array<int, 4>> join_form;
  /// Exponents (a,b,c,d) with s = 1^a 0^b 1^c 0^d, when s has at most one ascent.
  std::optional<std::array<int, 4>> meet_form;
};

IrreducibleKind classify_irreducible(const BitSeq& s);
bool is_join_irreducible(const BitSeq& s);
bool is_meet_irreducible(const BitSeq& s);

/// 0^a 1^b 0^c 1^d
BitSeq join_irreducible(int a, int b, int c, int d);
/// 1^a 0^b 1^c 0^d
BitSeq meet_irreducible(int a, int b, int c, int d);

/// All of S(n,r) in canonical (ascending) order.
std::vector<BitSeq> enumerate(int n, int r);
std::vector<BitSeq> enumerate_join_irr(int n, int r);
std::vector<BitSeq> enumerate_meet_irr(int n, int r);

/// A diamond r1·{10|01}·r2·{10|01}·r3 of S(n,r).
struct Interval2 {
  BitSeq prefix;
  BitSeq middle;
  BitSeq suffix;

  BitSeq top() const;     // r1 10 r2 10 r3
  BitSeq right() const;   // r1 10 r2 01 r3
  BitSeq left() const;    // r1 01 r2 10 r3
  BitSeq bottom() const;  // r1 01 r2 01 r3
  int length() const { return prefix.size() + middle.size() + suffix.size() + 4; }
  int weight() const { return prefix.weight() + middle.weight() + suffix.weight() + 2; }

  friend bool operator==(const Interval2&, const Interval2&) = default;
};

/// Every height-2 diamond of S(n,r), ordered by top (canonical order) and
/// then by the position of the first swap.
std::vector<Interval2> height2_intervals(int n, int r);

enum class DescentPolicy { Leftmost, Rightmost };

using SeqMultiset = std::map<BitSeq, long>;

/// Leaves of a descent tree of u: u1 10 u2 branches into u1 1 u2 and u1 0 u2.
SeqMultiset descent_leaves(const BitSeq& u, DescentPolicy policy = DescentPolicy::Leftmost);

}  // namespace gtutte

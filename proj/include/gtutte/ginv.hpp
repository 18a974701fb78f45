#pragma once

// The G-invariant, its Tutte specialization Sp, syzygies of height-2
// intervals, and the freedom-matroid basis of G(n,r).

#include <map>
#include <span>
#include <vector>

#include "gtutte/bipoly.hpp"
#include "gtutte/linalg.hpp"
#include "gtutte/matroid.hpp"
#include "gtutte/seqlat.hpp"

namespace gtutte {

/// Element of G(n,r): a rational combination of symbols [s], s in S(n,r).
struct GInv {
  int n = 0;
  int r = 0;
  std::map<BitSeq, Rat> coeffs;

  GInv() = default;
  GInv(int n_, int r_) : n(n_), r(r_) {}
  /// The single symbol [s].
  static GInv symbol(const BitSeq& s, const Rat& c = 1);

  /// Throws std::domain_error unless s lies in S(n,r).
  void add(const BitSeq& s, const Rat& c);
  Rat coeff(const BitSeq& s) const;
  bool is_zero() const { return coeffs.empty(); }

  GInv& operator+=(const GInv& other);
  GInv& operator-=(const GInv& other);
  GInv& operator*=(const Rat& c);
  friend GInv operator+(GInv a, const GInv& b) { return a += b; }
  friend GInv operator-(GInv a, const GInv& b) { return a -= b; }
  friend GInv operator*(const Rat& c, GInv v) { return v *= c; }
  friend bool operator==(const GInv&, const GInv&) = default;
};

/// Rank increments along the permutation `perm` (values 1..n).
BitSeq rank_sequence(const RankOracle& m, std::span<const int> perm);

/// Sum of [r(pi)] over all n! permutations.
GInv g_invariant(const RankOracle& m);

/// Symbols with positive coefficient in G(M), canonical order.
std::vector<BitSeq> support(const RankOracle& m);

/// Sp([s]) = sum_m (x-1)^(r - w_m) (y-1)^(m - w_m) / (m! (n-m)!), where w_m is
/// the weight of the first m digits.
BiPoly sp_symbol(const BitSeq& s);
BiPoly sp(const GInv& v);

/// Sp([p 10 q] - [p 01 q]) for a prefix p of length lambda and weight rho:
/// (x-1)^(r-rho-1) (x+y-xy) (y-1)^(lambda-rho) / ((lambda+1)! (n-lambda-1)!).
BiPoly cornerstone_diff(int lambda, int rho, int n, int r);

/// [top] - [right] - [left] + [bottom]
GInv sz(const Interval2& iv);

struct GMatrix {
  std::vector<BitSeq> order;  // canonical order of S(n,r)
  RatMatrix forward;          // (t, s) entry is g_t(F(s)); lower triangular
  RatMatrix inverse;
};

/// Cached per (n, r); thread-safe.
const GMatrix& g_matrix(int n, int r);

/// Coefficients c_s with v = sum_s c_s G(F(s)), by forward substitution.
std::map<BitSeq, Rat> freedom_expansion(const GInv& v);

/// (b_1-1)! (b_2-b_1)! ... (n-b_r+1)! times the number of flags of flats
/// Y_0 < ... < Y_r of F(s) with |Y_i| equal to the size of the defining flag.
Int diagonal_by_flags(const BitSeq& s);

enum class Side { Join, Meet };

/// Integer combination of irreducibles on the given side congruent to [s]
/// modulo the span of the sz(I). Meet side uses only sequences above s.
std::map<BitSeq, Int> straighten_symbol(const BitSeq& s, Side side);

}  // namespace gtutte

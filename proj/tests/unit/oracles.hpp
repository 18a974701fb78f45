#pragma once

// Slow reference implementations used only by the tests. They work on plain
// strings and vectors and share no code paths with the library beyond the
// Rat/BiPoly value types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gtutte/bipoly.hpp"

namespace oracle {

using gtutte::BiPoly;
using gtutte::Rat;

inline std::vector<int> prefix(const std::string& s) {
  std::vector<int> w{0};
  for (char c : s) w.push_back(w.back() + (c == '1'));
  return w;
}

inline bool dominates(const std::string& s, const std::string& t) {
  const auto a = prefix(s);
  const auto b = prefix(t);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

inline std::vector<std::string> all_sequences(int n, int r) {
  std::vector<std::string> out;
  for (unsigned v = 0; v < (1U << n); ++v) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back(((v >> i) & 1U) ? '1' : '0');
    if (std::count(s.begin(), s.end(), '1') == r) out.push_back(s);
  }
  return out;  // ascending lexicographic
}

// Least upper bound by search over all of S(n,r).
inline std::string lub(const std::string& s, const std::string& t) {
  const int r = static_cast<int>(std::count(s.begin(), s.end(), '1'));
  std::vector<std::string> ub;
  for (const auto& u : all_sequences(static_cast<int>(s.size()), r)) {
    if (dominates(u, s) && dominates(u, t)) ub.push_back(u);
  }
  for (const auto& u : ub) {
    if (std::all_of(ub.begin(), ub.end(), [&](const std::string& v) { return dominates(v, u); })) return u;
  }
  return {};
}

inline std::string glb(const std::string& s, const std::string& t) {
  const int r = static_cast<int>(std::count(s.begin(), s.end(), '1'));
  std::vector<std::string> lb;
  for (const auto& u : all_sequences(static_cast<int>(s.size()), r)) {
    if (dominates(s, u) && dominates(t, u)) lb.push_back(u);
  }
  for (const auto& u : lb) {
    if (std::all_of(lb.begin(), lb.end(), [&](const std::string& v) { return dominates(u, v); })) return u;
  }
  return {};
}

// Cover relation straight from the order: s > t with nothing strictly between.
inline bool covers_by_order(const std::string& s, const std::string& t) {
  if (s == t || !dominates(s, t)) return false;
  const int r = static_cast<int>(std::count(s.begin(), s.end(), '1'));
  for (const auto& u : all_sequences(static_cast<int>(s.size()), r)) {
    if (u != s && u != t && dominates(s, u) && dominates(u, t)) return false;
  }
  return true;
}

// Matroid given by its bases, subsets as sorted vectors of 1-indexed elements.
struct Bases {
  int n = 0;
  std::vector<unsigned> bases;  // bit e-1 for element e

  int rank(unsigned a) const {
    int best = 0;
    for (unsigned b : bases) best = std::max(best, __builtin_popcount(a & b));
    return best;
  }
};

// r-subsets B of {1..n} whose indicator is dominated by s.
inline Bases freedom_bases(const std::string& s) {
  Bases m;
  m.n = static_cast<int>(s.size());
  const int r = static_cast<int>(std::count(s.begin(), s.end(), '1'));
  for (unsigned v = 0; v < (1U << m.n); ++v) {
    if (__builtin_popcount(v) != r) continue;
    std::string ind;
    for (int e = 1; e <= m.n; ++e) ind.push_back(((v >> (e - 1)) & 1U) ? '1' : '0');
    if (dominates(s, ind)) m.bases.push_back(v);
  }
  return m;
}

// Deletion-contraction over basis lists.
inline BiPoly tutte_dc(int n, std::vector<unsigned> bases) {
  if (n == 0) return BiPoly(Rat(1));
  const unsigned e = 1U << (n - 1);
  bool in_all = true;
  bool in_none = true;
  for (unsigned b : bases) {
    in_all = in_all && (b & e);
    in_none = in_none && !(b & e);
  }
  auto strip = [&](std::vector<unsigned> v) {
    for (auto& b : v) b &= ~e;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  if (in_all) return BiPoly::x() * tutte_dc(n - 1, strip(bases));
  if (in_none) return BiPoly::y() * tutte_dc(n - 1, strip(bases));
  std::vector<unsigned> del;
  std::vector<unsigned> con;
  for (unsigned b : bases) (b & e ? con : del).push_back(b);
  return tutte_dc(n - 1, strip(del)) + tutte_dc(n - 1, strip(con));
}

inline BiPoly tutte(const Bases& m) { return tutte_dc(m.n, m.bases); }

// Sum over permutations of the rank-increment sequence.
inline std::map<std::string, long> g_invariant(const Bases& m) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::map<std::string, long> out;
  do {
    std::string s;
    unsigned a = 0;
    int prev = 0;
    for (int e : perm) {
      a |= 1U << (e - 1);
      const int rk = m.rank(a);
      s.push_back(rk > prev ? '1' : '0');
      prev = rk;
    }
    ++out[s];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Rat factorial(int n) {
  Rat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Sp of one symbol expanded with plain polynomial products.
inline BiPoly sp_symbol(const std::string& s) {
  const int n = static_cast<int>(s.size());
  const auto w = prefix(s);
  const int r = w.back();
  const BiPoly xm = BiPoly::x() - BiPoly(Rat(1));
  const BiPoly ym = BiPoly::y() - BiPoly(Rat(1));
  BiPoly out;
  for (int m = 0; m <= n; ++m) {
    BiPoly term(Rat(1) / (factorial(m) * factorial(n - m)));
    for (int k = 0; k < r - w[m]; ++k) term *= xm;
    for (int k = 0; k < m - w[m]; ++k) term *= ym;
    out += term;
  }
  return out;
}

inline Rat binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace oracle

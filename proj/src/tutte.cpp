#include "gtutte/tutte.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace gtutte {

namespace {

struct SeqHash {
  std::size_t operator()(const BitSeq& s) const {
    return std::hash<std::uint64_t>{}(s.value() * 64 + static_cast<std::uint64_t>(s.size()));
  }
};

std::mutex memo_mutex;
std::unordered_map<BitSeq, BiPoly, SeqHash> memo;

BiPoly freedom_rec(const BitSeq& s) {
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
  }
  BiPoly out;
  const std::vector<int> desc = descents(s);
  if (desc.empty()) {
    out = BiPoly::monomial(s.weight(), s.zeros());
  } else {
    // s = u1 10 u2 branches into u1 1 u2 (drop the 0) and u1 0 u2 (drop the 1).
    const int pos = desc.front();
    out = freedom_rec(s.erase(pos)) + freedom_rec(s.erase(pos - 1));
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(s, out);
  return out;
}

BiPoly power_sum_y(int r, int b) {
  BiPoly out;
  for (int j = 0; j < b; ++j) out += BiPoly::monomial(0, b - 1 - j, Rat(binomial(r - 1 + j, j)));
  return out;
}

}  // namespace

std::string route_name(Route route) {
  switch (route) {
    case Route::Oracle: return "oracle";
    case Route::Uniform: return "uniform";
    case Route::DirectSum: return "direct-sum";
    case Route::DescentTree: return "descent-tree";
    case Route::MeetIrreducible: return "meet-irreducible";
    case Route::Paving: return "paving";
  }
  return "unknown";
}

TuttePoly tutte_oracle(const RankOracle& m) {
  const int n = m.size();
  const int r = m.rank();
  std::map<std::pair<int, int>, long> counts;
  for (ElementSet a = 0;; ++a) {
    const int rk = m.rank(a);
    ++counts[{r - rk, std::popcount(a) - rk}];
    if (a == full_set(n)) break;
  }
  BiPoly out;
  for (const auto& [ij, c] : counts) out += Rat(c) * shifted_monomial(ij.first, ij.second);
  return {out, Route::Oracle};
}

TuttePoly tutte_uniform(int b, int c) {
  if (b < 0 || c < 0) throw std::domain_error("uniform matroid needs b, c >= 0");
  if (b == 0 && c == 0) return {BiPoly(Rat(1)), Route::Uniform};
  BiPoly out;
  for (int j = 0; j < b; ++j) out += BiPoly::monomial(b - j, 0, Rat(binomial(c - 1 + j, j)));
  for (int k = 0; k < c; ++k) out += BiPoly::monomial(0, c - k, Rat(binomial(b - 1 + k, k)));
  return {out, Route::Uniform};
}

TuttePoly tutte_direct_sum_form(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw std::domain_error("negative exponent");
  return {BiPoly::monomial(d, a) * tutte_uniform(b, c).poly, Route::DirectSum};
}

TuttePoly tutte_freedom(const BitSeq& s) { return {freedom_rec(s), Route::DescentTree}; }

BiPoly t_circ(int c, int d) {
  if (c < 0) throw std::domain_error("t_circ needs c >= 0");
  if (c == 0) return BiPoly{};
  if (d < 1) throw std::domain_error("t_circ needs d >= 1");
  BiPoly out;
  for (int k = 0; k < c; ++k) out += BiPoly::monomial(c - 1 - k, 0, Rat(binomial(d - 1 + k, k)));
  return out;
}

TuttePoly tutte_meet_irr(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw std::domain_error("negative exponent");
  const int r = a + c;
  const int n = a + b + c + d;
  if (r < 1) throw std::domain_error("tutte_meet_irr needs r = a + c >= 1");
  BiPoly sum;
  for (int k = 0; k < b; ++k) {
    BiPoly inner;
    for (int i = 0; i <= k; ++i) inner += BiPoly::monomial(0, k - i, Rat(binomial(a - 1 + i, i)));
    sum += inner * t_circ(c, b - k + d);
  }
  return {tutte_uniform(r, n - r).poly - BiPoly::curve() * sum, Route::MeetIrreducible};
}

BiPoly tutte_mi_paving(int n, int r, int b) {
  if (r < 1 || b < 0 || r + b > n) throw std::domain_error("tutte_mi_paving needs r >= 1, r + b <= n");
  return tutte_uniform(r, n - r).poly - BiPoly::curve() * power_sum_y(r, b);
}

TuttePoly paving_tutte(int n, int r, const std::map<int, long>& f) {
  if (r < 0 || r > n) throw std::domain_error("paving_tutte needs 0 <= r <= n");
  BiPoly sum;
  for (const auto& [size, count] : f) {
    const int b = size - (r - 1);
    if (b >= 1 && count != 0) sum += Rat(count) * power_sum_y(r, b);
  }
  return {tutte_uniform(r, n - r).poly - BiPoly::curve() * sum, Route::Paving};
}

BiPoly at_x_one(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({0, m.y_exp}, c);
  return out;
}

BiPoly at_y_one(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.x_exp, 0}, c);
  return out;
}

FGT fgt(const BitSeq& u) {
  const BiPoly t = tutte_freedom(u).poly;
  const Rat tau = t.eval(1, 1);
  return {at_x_one(t), at_y_one(t), tau.get_num()};
}

BiPoly L_comb(const BitSeq& r1, const BitSeq& r2, const BitSeq& r3) {
  const Interval2 iv{r1, r2, r3};
  return tutte_freedom(iv.top()).poly - tutte_freedom(iv.right()).poly -
         tutte_freedom(iv.left()).poly + tutte_freedom(iv.bottom()).poly;
}

}  // namespace gtutte

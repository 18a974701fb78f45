#include "gtutte/ginv.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gtutte {

namespace {

void check_member(const BitSeq& s, int n, int r) {
  if (s.size() != n || s.weight() != r) {
    throw std::domain_error("sequence " + s.str() + " is not in S(" + std::to_string(n) + "," +
                            std::to_string(r) + ")");
  }
}

// Swaps at the left digit of each given pair, e.g. 01 -> 10.
BitSeq swap_pairs(const BitSeq& s, int p, int q) { return s.swap_adjacent(p).swap_adjacent(q); }

}  // namespace

GInv GInv::symbol(const BitSeq& s, const Rat& c) {
  GInv v(s.size(), s.weight());
  v.add(s, c);
  return v;
}

void GInv::add(const BitSeq& s, const Rat& c) {
  check_member(s, n, r);
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Rat GInv::coeff(const BitSeq& s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? Rat(0) : it->second;
}

GInv& GInv::operator+=(const GInv& other) {
  if (other.n != n || other.r != r) throw std::domain_error("G-space mismatch");
  for (const auto& [s, c] : other.coeffs) add(s, c);
  return *this;
}

GInv& GInv::operator-=(const GInv& other) {
  if (other.n != n || other.r != r) throw std::domain_error("G-space mismatch");
  for (const auto& [s, c] : other.coeffs) add(s, -c);
  return *this;
}

GInv& GInv::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [s, v] : coeffs) v *= c;
  return *this;
}

BitSeq rank_sequence(const RankOracle& m, std::span<const int> perm) {
  const int n = m.size();
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw std::domain_error("not a permutation of the ground set");
  std::vector<int> bits;
  ElementSet prefix = 0;
  int prev = 0;
  for (int e : perm) {
    prefix |= 1U << (e - 1);
    const int rk = m.rank(prefix);
    bits.push_back(rk - prev);
    prev = rk;
  }
  return BitSeq::from_bits(bits);
}

GInv g_invariant(const RankOracle& m) {
  const int n = m.size();
  std::vector<long> counts(std::size_t{1} << n, 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<ElementSet> prefix(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> rk(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> prev = perm;
  int from = 0;  // first position whose prefix must be recomputed
  do {
    for (int i = from; i < n; ++i) {
      prefix[i + 1] = prefix[i] | (1U << (perm[i] - 1));
      rk[i + 1] = m.rank(prefix[i + 1]);
    }
    std::uint64_t value = 0;
    for (int i = 1; i <= n; ++i) value = (value << 1) | static_cast<std::uint64_t>(rk[i] - rk[i - 1]);
    ++counts[value];
    prev = perm;
    if (!std::next_permutation(perm.begin(), perm.end())) break;
    from = 0;
    while (from < n && perm[from] == prev[from]) ++from;
  } while (true);
  GInv out(n, m.rank());
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] != 0) out.add(BitSeq::from_value(v, n), Rat(counts[v]));
  }
  return out;
}

std::vector<BitSeq> support(const RankOracle& m) {
  std::vector<BitSeq> out;
  for (const auto& [s, c] : g_invariant(m).coeffs) {
    if (c > 0) out.push_back(s);
  }
  return out;
}

BiPoly sp_symbol(const BitSeq& s) { return sp(GInv::symbol(s)); }

BiPoly sp(const GInv& v) {
  // Symbols share many (x-1)^i (y-1)^j terms; collect their weights first.
  std::map<std::pair<int, int>, Rat> weights;
  for (const auto& [s, c] : v.coeffs) {
    const std::vector<int> w = prefix_weights(s);
    for (int m = 0; m <= v.n; ++m) {
      weights[{v.r - w[m], m - w[m]}] += c / Rat(factorial(m) * factorial(v.n - m));
    }
  }
  BiPoly out;
  for (const auto& [ij, c] : weights) {
    if (c != 0) out += c * shifted_monomial(ij.first, ij.second);
  }
  return out;
}

BiPoly cornerstone_diff(int lambda, int rho, int n, int r) {
  if (rho < 0 || rho > lambda || rho >= r || lambda + 2 > n) {
    throw std::domain_error("cornerstone_diff needs 0 <= rho <= lambda, rho < r, lambda + 2 <= n");
  }
  const Rat scale(Int(1), factorial(lambda + 1) * factorial(n - lambda - 1));
  return scale * (pow(BiPoly::x() - BiPoly(Rat(1)), r - rho - 1) * BiPoly::curve() *
                  pow(BiPoly::y() - BiPoly(Rat(1)), lambda - rho));
}

GInv sz(const Interval2& iv) {
  GInv out(iv.length(), iv.weight());
  out.add(iv.top(), 1);
  out.add(iv.right(), -1);
  out.add(iv.left(), -1);
  out.add(iv.bottom(), 1);
  return out;
}

const GMatrix& g_matrix(int n, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<GMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, r}); it != cache.end()) return *it->second;
  }
  auto gm = std::make_unique<GMatrix>();
  gm->order = enumerate(n, r);
  const std::size_t size = gm->order.size();
  gm->forward = RatMatrix(size, size);
  std::map<BitSeq, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index[gm->order[i]] = i;
  for (std::size_t j = 0; j < size; ++j) {
    for (const auto& [t, c] : g_invariant(FreedomMatroid(gm->order[j])).coeffs) {
      gm->forward(index.at(t), j) = c;
    }
  }
  auto inv = inverse(gm->forward);
  if (!inv) throw std::logic_error("g-matrix is singular");
  gm->inverse = std::move(*inv);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(n, r), std::move(gm));
  return *it->second;
}

std::map<BitSeq, Rat> freedom_expansion(const GInv& v) {
  const GMatrix& gm = g_matrix(v.n, v.r);
  const std::size_t size = gm.order.size();
  std::vector<Rat> c(size);
  for (std::size_t i = 0; i < size; ++i) {
    Rat acc = v.coeff(gm.order[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (gm.forward(i, j) != 0) acc -= gm.forward(i, j) * c[j];
    }
    c[i] = acc / gm.forward(i, i);
  }
  std::map<BitSeq, Rat> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (c[i] != 0) out.emplace(gm.order[i], c[i]);
  }
  return out;
}

Int diagonal_by_flags(const BitSeq& s) {
  const int n = s.size();
  const int r = s.weight();
  if (r == 0) return factorial(n);
  const std::vector<int> b = s.ones();
  Int factor = factorial(b[0] - 1);
  for (int i = 1; i < r; ++i) factor *= factorial(b[i] - b[i - 1]);
  factor *= factorial(n - b[r - 1] + 1);

  std::vector<int> target(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i < r; ++i) target[i] = b[i] - 1;  // |X_i| = b_{i+1} - 1
  target[r] = n;

  const FreedomMatroid m(s);
  std::vector<std::vector<ElementSet>> by_rank(static_cast<std::size_t>(r) + 1);
  for (ElementSet f : flats(m)) {
    const int rk = m.rank(f);
    if (std::popcount(f) == target[rk]) by_rank[rk].push_back(f);
  }
  // Count chains Y_0 < Y_1 < ... < Y_r through the size-matched flats.
  std::vector<Int> ways(by_rank[0].size(), 1);
  for (int i = 1; i <= r; ++i) {
    std::vector<Int> next(by_rank[i].size(), 0);
    for (std::size_t a = 0; a < by_rank[i].size(); ++a) {
      for (std::size_t c = 0; c < by_rank[i - 1].size(); ++c) {
        if ((by_rank[i - 1][c] & ~by_rank[i][a]) == 0) next[a] += ways[c];
      }
    }
    ways = std::move(next);
  }
  Int phi = 0;
  for (const Int& w : ways) phi += w;
  return factor * phi;
}

std::map<BitSeq, Int> straighten_symbol(const BitSeq& s, Side side) {
  std::map<BitSeq, Int> comb{{s, 1}};
  const bool meet = side == Side::Meet;
  auto reducible = [&](const BitSeq& t) {
    return meet ? !is_meet_irreducible(t) : !is_join_irreducible(t);
  };
  while (true) {
    // Meet side: rewrite the lowest reducible symbol; join side: the highest.
    auto it = comb.end();
    if (meet) {
      it = std::find_if(comb.begin(), comb.end(), [&](const auto& kv) { return reducible(kv.first); });
    } else {
      auto rit = std::find_if(comb.rbegin(), comb.rend(), [&](const auto& kv) { return reducible(kv.first); });
      if (rit != comb.rend()) it = std::prev(rit.base());
    }
    if (it == comb.end()) break;
    const BitSeq t = it->first;
    const Int c = it->second;
    comb.erase(it);

    // Left digits of each 01 (meet) or 10 (join) pair.
    std::vector<int> pairs;
    for (int pos : meet ? ascents(t) : descents(t)) pairs.push_back(pos - 1);
    std::optional<std::array<BitSeq, 3>> best;  // {far corner, first swapped, second swapped}
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const BitSeq far = swap_pairs(t, pairs[i], pairs[j]);
        if (!best || (meet ? far > (*best)[0] : far < (*best)[0])) {
          best = {far, t.swap_adjacent(pairs[i]), t.swap_adjacent(pairs[j])};
        }
      }
    }
    // t is one extreme corner; sz(I) = 0 gives t = (two middle corners) - (far corner).
    for (const BitSeq& mid : {(*best)[1], (*best)[2]}) {
      if ((comb[mid] += c) == 0) comb.erase(mid);
    }
    if ((comb[(*best)[0]] -= c) == 0) comb.erase((*best)[0]);
  }
  return comb;
}

}  // namespace gtutte

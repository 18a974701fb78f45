#include "gtutte/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace gtutte {

namespace {

void check_range(int n, ElementSet a) {
  if ((a & ~full_set(n)) != 0) {
    throw std::domain_error("element outside the ground set {1.." + std::to_string(n) + "}");
  }
}

bool lex_less(ElementSet a, ElementSet b) { return elements_of(a) < elements_of(b); }

// Visits every k-subset of {1..n} in increasing numeric order.
template <class Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(ElementSet{0});
    return;
  }
  std::uint64_t v = (1ULL << k) - 1;
  const std::uint64_t limit = 1ULL << n;
  while (v < limit) {
    if (!visit(static_cast<ElementSet>(v))) return;
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t rr = v + c;
    v = (((rr ^ v) >> 2) / c) | rr;
  }
}

}  // namespace

ElementSet make_set(std::initializer_list<int> elements) {
  return make_set(std::vector<int>(elements));
}

ElementSet make_set(const std::vector<int>& elements) {
  ElementSet a = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) throw std::domain_error("element out of range");
    a |= 1U << (e - 1);
  }
  return a;
}

std::vector<int> elements_of(ElementSet a) {
  std::vector<int> out;
  for (int e = 1; a != 0; ++e, a >>= 1) {
    if (a & 1U) out.push_back(e);
  }
  return out;
}

int freedom_rank(const BitSeq& s, ElementSet a) {
  check_range(s.size(), a);
  int accepted = 0;
  int prefix = 0;
  for (int i = 1; i <= s.size(); ++i) {
    prefix += s.bit(i);
    if ((a >> (i - 1)) & 1U) {
      if (accepted < prefix) ++accepted;
    }
  }
  return accepted;
}

FreedomMatroid::FreedomMatroid(BitSeq seq) : seq_(seq), prefix_(prefix_weights(seq)) {
  if (seq_.size() > kMaxGroundSet) throw std::domain_error("ground set too large");
}

int FreedomMatroid::rank(ElementSet a) const {
  check_range(size(), a);
  int accepted = 0;
  for (int i = 1; a != 0; ++i, a >>= 1) {
    if ((a & 1U) && accepted < prefix_[i]) ++accepted;
  }
  return accepted;
}

BasisListMatroid::BasisListMatroid(int n, int r, std::vector<ElementSet> bases)
    : n_(n), r_(r), bases_(std::move(bases)) {
  if (n < 0 || n > 20) throw std::domain_error("basis-list matroids support 0 <= n <= 20");
  if (r < 0 || r > n) throw std::domain_error("rank must satisfy 0 <= r <= n");
  if (bases_.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  for (ElementSet b : bases_) {
    check_range(n, b);
    if (std::popcount(b) != r) throw std::invalid_argument("basis of the wrong size");
  }
  sort_lexicographic(bases_);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_table_.assign(std::size_t{1} << n, 0);
  for (ElementSet a = 0; a < (ElementSet{1} << n); ++a) {
    int best = 0;
    for (ElementSet b : bases_) best = std::max(best, std::popcount(a & b));
    rank_table_[a] = static_cast<std::uint8_t>(best);
  }
}

BasisListMatroid BasisListMatroid::from_oracle(const RankOracle& m) {
  return BasisListMatroid(m.size(), m.rank(), gtutte::bases(m));
}

int BasisListMatroid::rank(ElementSet a) const {
  check_range(n_, a);
  return rank_table_[a];
}

void sort_lexicographic(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
}

std::vector<ElementSet> bases(const RankOracle& m) {
  std::vector<ElementSet> out;
  const int r = m.rank();
  for_each_k_subset(m.size(), r, [&](ElementSet a) {
    if (m.rank(a) == r) out.push_back(a);
    return true;
  });
  sort_lexicographic(out);
  return out;
}

bool validate_basis_list(int n, int r, const std::vector<ElementSet>& bases) {
  if (bases.empty() || n < 0 || n > kMaxGroundSet) return false;
  for (ElementSet b : bases) {
    if ((b & ~full_set(n)) != 0 || std::popcount(b) != r) return false;
  }
  std::vector<ElementSet> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](ElementSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (ElementSet b1 : sorted) {
    for (ElementSet b2 : sorted) {
      for (int e : elements_of(b1 & ~b2)) {
        const ElementSet without = b1 & ~(1U << (e - 1));
        bool found = false;
        for (int f : elements_of(b2 & ~b1)) {
          if (contains(without | (1U << (f - 1)))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

int girth(const RankOracle& m) {
  for (int k = 1; k <= m.size(); ++k) {
    bool dependent = false;
    for_each_k_subset(m.size(), k, [&](ElementSet a) {
      if (m.rank(a) < k) dependent = true;
      return !dependent;
    });
    if (dependent) return k;
  }
  return kInfiniteGirth;
}

bool is_flat(const RankOracle& m, ElementSet a) {
  const int ra = m.rank(a);
  for (int e = 1; e <= m.size(); ++e) {
    const ElementSet bit = 1U << (e - 1);
    if ((a & bit) == 0 && m.rank(a | bit) == ra) return false;
  }
  return true;
}

std::vector<ElementSet> flats(const RankOracle& m) {
  std::vector<ElementSet> out;
  for (ElementSet a = 0; a <= full_set(m.size()); ++a) {
    if (is_flat(m, a)) out.push_back(a);
    if (a == full_set(m.size())) break;
  }
  sort_lexicographic(out);
  return out;
}

std::vector<ElementSet> cyclic_flats(const RankOracle& m) {
  std::vector<ElementSet> out;
  for (ElementSet f : flats(m)) {
    const int rf = m.rank(f);
    bool cyclic = true;
    for (int e : elements_of(f)) {
      if (m.rank(f & ~(1U << (e - 1))) != rf) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.push_back(f);
  }
  return out;
}

bool is_circuit(const RankOracle& m, ElementSet c) {
  const int k = std::popcount(c);
  if (k == 0 || m.rank(c) != k - 1) return false;
  for (int e : elements_of(c)) {
    if (m.rank(c & ~(1U << (e - 1))) != k - 1) return false;
  }
  return true;
}

bool is_hyperplane(const RankOracle& m, ElementSet h) {
  return m.rank(h) == m.rank() - 1 && is_flat(m, h);
}

BasisListMatroid relax_circuit_hyperplane(const BasisListMatroid& m, ElementSet c) {
  const bool circuit = is_circuit(m, c);
  const bool hyperplane = is_hyperplane(m, c);
  if (!circuit || !hyperplane) {
    std::string what = "set {";
    for (int e : elements_of(c)) what += (what.back() == '{' ? "" : ",") + std::to_string(e);
    what += "} is not a circuit-hyperplane:";
    if (!circuit) what += " not a circuit;";
    if (!hyperplane) what += " not a hyperplane;";
    what.pop_back();
    throw std::invalid_argument(what);
  }
  std::vector<ElementSet> relaxed = m.bases();
  relaxed.push_back(c);
  return BasisListMatroid(m.size(), m.rank(), std::move(relaxed));
}

std::optional<std::map<int, long>> paving_profile(const RankOracle& m) {
  const int r = m.rank();
  if (girth(m) < r) return std::nullopt;
  std::map<int, long> profile;
  if (r == 0) return profile;
  for (ElementSet a = 0; a <= full_set(m.size()); ++a) {
    if (m.rank(a) == r - 1 && is_flat(m, a)) ++profile[std::popcount(a)];
    if (a == full_set(m.size())) break;
  }
  return profile;
}

}  // namespace gtutte

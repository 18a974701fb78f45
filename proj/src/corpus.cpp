#include "gtutte/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gtutte/seqlat.hpp"

namespace gtutte {

namespace {

int inverse_mod(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  throw std::domain_error("no inverse");
}

// Rank over GF(p) of the columns selected by `cols`.
int rank_mod_p(const std::vector<std::vector<int>>& mat, ElementSet cols, int p) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : mat) {
    std::vector<int> picked;
    for (int e : elements_of(cols)) picked.push_back(row[e - 1]);
    rows.push_back(std::move(picked));
  }
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = inverse_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = (v * inv) % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t j = 0; j < width; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  for (ElementSet a = 0; a <= full_set(n); ++a) {
    if (std::popcount(a) == k) out.push_back(a);
    if (a == full_set(n)) break;
  }
  return out;
}

}  // namespace

BasisListMatroid random_linear_matroid(int n, int r, int p, Rng& rng) {
  std::uniform_int_distribution<int> entry(1, p - 1);
  std::bernoulli_distribution zero(0.5);
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(r), std::vector<int>(n, 0));
  for (auto& row : mat) {
    for (auto& v : row) v = zero(rng) ? 0 : entry(rng);
  }
  const int rk = rank_mod_p(mat, full_set(n), p);
  std::vector<ElementSet> found;
  for (ElementSet b : k_subsets(n, rk)) {
    if (rank_mod_p(mat, b, p) == rk) found.push_back(b);
  }
  return BasisListMatroid(n, rk, std::move(found));
}

SparsePaving random_sparse_paving(int n, int r, int max_family, Rng& rng) {
  if (r < 1 || r >= n) throw std::domain_error("sparse paving needs 1 <= r < n");
  std::vector<ElementSet> all = k_subsets(n, r);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<ElementSet> family;
  for (ElementSet c : all) {
    if (static_cast<int>(family.size()) >= max_family) break;
    const bool fits = std::all_of(family.begin(), family.end(),
                                  [&](ElementSet f) { return std::popcount(f & c) <= r - 2; });
    if (fits) family.push_back(c);
  }
  std::vector<ElementSet> kept;
  for (ElementSet b : k_subsets(n, r)) {
    if (std::find(family.begin(), family.end(), b) == family.end()) kept.push_back(b);
  }
  sort_lexicographic(family);
  return {BasisListMatroid(n, r, std::move(kept)), std::move(family)};
}

BasisListMatroid relabel(const RankOracle& m, const std::vector<int>& perm) {
  std::vector<ElementSet> renamed;
  for (ElementSet b : bases(m)) {
    ElementSet c = 0;
    for (int e : elements_of(b)) c |= 1U << (perm.at(e - 1) - 1);
    renamed.push_back(c);
  }
  return BasisListMatroid(m.size(), m.rank(), std::move(renamed));
}

std::vector<BasisListMatroid> random_corpus(int count, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BasisListMatroid> out;
  std::uniform_int_distribution<int> pick_n(1, max_n);
  while (static_cast<int>(out.size()) < count) {
    const int n = pick_n(rng);
    const int r = std::uniform_int_distribution<int>(0, n)(rng);
    const int kind = static_cast<int>(out.size() % 3);
    if (kind == 0) {
      const int p = std::bernoulli_distribution(0.5)(rng) ? 2 : 3;
      out.push_back(random_linear_matroid(n, r, p, rng));
    } else if (kind == 1 && r >= 1 && r < n) {
      const int cap = std::uniform_int_distribution<int>(1, 4)(rng);
      out.push_back(random_sparse_paving(n, r, cap, rng).matroid);
    } else {
      std::vector<int> bits(static_cast<std::size_t>(n), 0);
      std::fill(bits.begin(), bits.begin() + r, 1);
      std::shuffle(bits.begin(), bits.end(), rng);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      out.push_back(relabel(FreedomMatroid(BitSeq::from_bits(bits)), perm));
    }
    const auto& m = out.back();
    if (!validate_basis_list(m.size(), m.rank(), m.bases())) {
      throw std::logic_error("corpus generator produced an invalid basis list");
    }
  }
  return out;
}

std::vector<RelaxationPair> relaxation_pairs(int count, int max_n, std::uint64_t seed) {
  if (max_n < 3) throw std::domain_error("relaxation pairs need n >= 3");
  Rng rng(seed);
  std::vector<RelaxationPair> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int cap = std::uniform_int_distribution<int>(1, 4)(rng);
    SparsePaving sp = random_sparse_paving(n, r, cap, rng);
    const ElementSet c =
        sp.family[std::uniform_int_distribution<std::size_t>(0, sp.family.size() - 1)(rng)];
    BasisListMatroid after = relax_circuit_hyperplane(sp.matroid, c);
    out.push_back({std::move(sp.matroid), std::move(after), c});
  }
  return out;
}

}  // namespace gtutte

#pragma once

// Seeded random matroids used by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "gtutte/matroid.hpp"

namespace gtutte {

using Rng = std::mt19937_64;

/// Column matroid of a random r x n matrix over GF(p) (p prime, small).
/// Entries are zero with probability 1/2 so loops and parallel classes show
/// up regularly. The rank may come out below r.
BasisListMatroid random_linear_matroid(int n, int r, int p, Rng& rng);

struct SparsePaving {
  BasisListMatroid matroid;
  /// Removed r-sets; each is a circuit-hyperplane of `matroid`.
  std::vector<ElementSet> family;
};

/// All r-subsets minus a random family of r-sets that pairwise share at most
/// r-2 elements. Requires 1 <= r < n.
SparsePaving random_sparse_paving(int n, int r, int max_family, Rng& rng);

/// Copy of `m` with element e renamed to perm[e-1].
BasisListMatroid relabel(const RankOracle& m, const std::vector<int>& perm);

/// Mix of linear, sparse paving and relabeled freedom matroids with
/// 1 <= n <= max_n, each checked against the exchange axiom.
std::vector<BasisListMatroid> random_corpus(int count, int max_n, std::uint64_t seed);

struct RelaxationPair {
  BasisListMatroid before;
  BasisListMatroid after;
  ElementSet relaxed;
};

/// Pairs (M, M') with M' obtained from M by relaxing a circuit-hyperplane.
std::vector<RelaxationPair> relaxation_pairs(int count, int max_n, std::uint64_t seed);

}  // namespace gtutte

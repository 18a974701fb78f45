#pragma once

// Matroid rank oracles on the ground set {1..n}.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "gtutte/seqlat.hpp"

namespace gtutte {

/// Subset of {1..n}; element e is bit e-1.
using ElementSet = std::uint32_t;

inline constexpr int kMaxGroundSet = 31;

ElementSet make_set(std::initializer_list<int> elements);
ElementSet make_set(const std::vector<int>& elements);
std::vector<int> elements_of(ElementSet a);
inline ElementSet full_set(int n) { return n >= 32 ? ~0U : ((1U << n) - 1U); }

class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int size() const = 0;
  /// Rank of the whole ground set.
  virtual int rank() const = 0;
  /// Throws std::domain_error if `a` has an element outside {1..n}.
  virtual int rank(ElementSet a) const = 0;
};

/// Greedy rank of `a` in the freedom matroid F(s): scan the elements of `a`
/// in increasing order, keeping element i while fewer than wt(s_1..s_i)
/// elements have been kept.
int freedom_rank(const BitSeq& s, ElementSet a);

class FreedomMatroid final : public RankOracle {
 public:
  explicit FreedomMatroid(BitSeq seq);
  const BitSeq& sequence() const { return seq_; }
  int size() const override { return seq_.size(); }
  int rank() const override { return seq_.weight(); }
  int rank(ElementSet a) const override;

 private:
  BitSeq seq_;
  std::vector<int> prefix_;
};

class BasisListMatroid final : public RankOracle {
 public:
  /// Checks sizes and ranges only; see validate_basis_list for the exchange
  /// axiom. Bases are stored sorted lexicographically by element list.
  BasisListMatroid(int n, int r, std::vector<ElementSet> bases);
  /// Snapshot of any rank oracle.
  static BasisListMatroid from_oracle(const RankOracle& m);

  int size() const override { return n_; }
  int rank() const override { return r_; }
  int rank(ElementSet a) const override;
  const std::vector<ElementSet>& bases() const { return bases_; }

  friend bool operator==(const BasisListMatroid& a, const BasisListMatroid& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bases_ == b.bases_;
  }

 private:
  int n_;
  int r_;
  std::vector<ElementSet> bases_;
  std::vector<std::uint8_t> rank_table_;  // max |A ∩ B| over bases, per subset
};

/// Sorts sets lexicographically by their ascending element lists.
void sort_lexicographic(std::vector<ElementSet>& sets);

/// All r-subsets of full rank, lexicographically sorted.
std::vector<ElementSet> bases(const RankOracle& m);

/// Every set has size r and the basis-exchange axiom holds.
bool validate_basis_list(int n, int r, const std::vector<ElementSet>& bases);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Minimum size of a dependent set; kInfiniteGirth for free matroids.
int girth(const RankOracle& m);

bool is_flat(const RankOracle& m, ElementSet a);
std::vector<ElementSet> flats(const RankOracle& m);
/// Flats whose restriction has no isthmus, ∅ included when M has no loops.
std::vector<ElementSet> cyclic_flats(const RankOracle& m);

bool is_circuit(const RankOracle& m, ElementSet c);
bool is_hyperplane(const RankOracle& m, ElementSet h);

/// Adds C to the bases. Throws std::invalid_argument when C is not a circuit
/// or not a hyperplane, naming the failing half.
BasisListMatroid relax_circuit_hyperplane(const BasisListMatroid& m, ElementSet c);

/// Copoint-size counts (flats of rank r-1, keyed by size) when M is paving
/// (girth >= r); nullopt otherwise.
std::optional<std::map<int, long>> paving_profile(const RankOracle& m);

}  // namespace gtutte

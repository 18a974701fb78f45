#pragma once

// Brylawski's linear relations J_m on Tutte coefficients t_ij.

#include <vector>

#include "gtutte/bipoly.hpp"
#include "gtutte/linalg.hpp"

namespace gtutte {

/// t_ij for 0 <= i <= r, 0 <= j <= n - r. Reads outside the grid give 0.
class CoeffGrid {
 public:
  CoeffGrid(int n, int r);
  /// Terms of p outside the grid are dropped; see fits() to detect them.
  static CoeffGrid from_poly(const BiPoly& p, int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  Rat at(int i, int j) const;
  void set(int i, int j, const Rat& v);
  /// Grid of x^d y^a times this polynomial, in the (n+d+a, r+d) frame.
  CoeffGrid shifted(int d, int a) const;
  /// Row-major over i then j: index i * (n-r+1) + j.
  RatVector flatten() const;
  std::size_t cells() const { return t_.size(); }

 private:
  int n_;
  int r_;
  std::vector<Rat> t_;
};

/// Whether every term of p lies in the (n,r) grid.
bool fits(const BiPoly& p, int n, int r);

/// sum_{alpha<=m} sum_{beta<=alpha} (-1)^beta C(alpha,beta) t_{m-alpha,beta}
Rat J(int m, const CoeffGrid& g);

/// Coefficient vector of J_m in the flattened (n,r) grid.
RatVector J_vector(int m, int n, int r);

/// Hook H_m(d,a) and centered hook; both throw std::domain_error unless
/// 0 <= d + a <= m.
Rat hook(int m, int d, int a, const CoeffGrid& g);
Rat centered_hook(int m, int d, int a, const CoeffGrid& g);

struct SatValue {
  int m = 0;
  Rat value;
};

/// J_m for m = 0..n-1.
std::vector<SatValue> verify_sat(const CoeffGrid& g);

struct RelationSpaceReport {
  int n = 0;
  int r = 0;
  std::size_t cells = 0;
  std::size_t relation_dim = 0;  // nullity of the matrix of freedom grids
  std::size_t expected = 0;
  std::size_t generator_rank = 0;
  bool generators_vanish = false;
  bool ok() const {
    return generators_vanish && relation_dim == expected && generator_rank == expected;
  }
};

/// Relations on grids of all freedom (n,r)-matroids versus J_0..J_{n-1}.
RelationSpaceReport relation_nullspace_check(int n, int r);

/// True iff every nonzero t_ab lies in {(i,0): 1 <= i <= r} union
/// {(i,j): 0 <= i <= r-k+1, 1 <= j <= n-r}.
bool girth_support_check(const CoeffGrid& g, int k);

/// Same as relation_nullspace_check for freedom matroids of girth >= k, with
/// generators J_0..J_{n-1} and t_ij for r-k+2 <= i <= r, 1 <= j <= n-r.
RelationSpaceReport girth_relation_check(int n, int r, int k);

}  // namespace gtutte

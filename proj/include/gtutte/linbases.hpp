#pragma once

// Coefficient matrices of freedom Tutte polynomials, the join- and
// meet-irreducible bases of their span, and the relations among them.

#include <optional>
#include <string>
#include <vector>

#include "gtutte/bipoly.hpp"
#include "gtutte/linalg.hpp"
#include "gtutte/matroid.hpp"
#include "gtutte/seqlat.hpp"

namespace gtutte {

/// Row order shared by every coefficient matrix of (n,r)-polynomials:
///   y^a x^r, ..., y^a x   for a = 0..n-r-1,
///   y^(n-r) x^r,
///   y, y^2, ..., y^(n-r),
///   y^(n-r) x^(r-1), ..., y^(n-r) x.
/// The constant monomial is left out (Tutte polynomials of nonempty matroids
/// have none) except for n = 0.
std::vector<Monomial> monomial_order(int n, int r);

/// Coefficients of p along `order`; monomials of p outside `order` are
/// dropped (see express_in_basis for how they are reported).
RatVector coefficient_vector(const BiPoly& p, const std::vector<Monomial>& order);

/// Columns are T(F(s)) for the given sequences, rows follow monomial_order.
RatMatrix coefficient_matrix(const std::vector<BitSeq>& seqs, int n, int r);

struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  RatMatrix matrix;
};

/// Join-irreducibles 0^a 1^b 0^(n-r-a) 1^(r-b) for a = 0..n-r-1 and
/// b = r..1, then 0^(n-r) 1^r.
std::vector<BitSeq> gamma_columns(int n, int r);

/// Tutte coefficients of gamma_columns over monomial_order. Row labels are
/// "x^i*y^j", column labels the defining sequences.
LabeledMatrix gamma_matrix(int n, int r);

struct BlockCheck {
  bool ok = false;
  std::string detail;  // first violation, empty when ok
};

/// Shape of the first r(n-r)+1 rows of Gamma: zero above the block diagonal,
/// each r x r diagonal block zero below its anti-diagonal with a nonzero
/// anti-diagonal, and a final column holding a single 1 in the last row.
BlockCheck check_block_structure(int n, int r);

/// Rank of the coefficient matrix of all T(F(s)), s in S(n,r).
std::size_t tutte_space_dim(int n, int r);

enum class BasisKind { Join, Meet };

/// Join: gamma_columns order. Meet: canonical order of the meet-irreducibles.
std::vector<BitSeq> basis_sequences(int n, int r, BasisKind kind);

struct Expression {
  /// Coordinates in the basis; empty when p is outside the span.
  std::optional<std::map<BitSeq, Rat>> coords;
  /// p minus the reconstruction from the solved coordinates.
  BiPoly residual;

  bool in_span() const { return coords.has_value(); }
};

Expression express_in_basis(const BiPoly& p, BasisKind kind, int n, int r);

/// Meet-basis coordinates of tutte_oracle(m).
std::map<BitSeq, Rat> straighten_matroid(const RankOracle& m);

/// tau(r2) [T(F(upper_top)) - T(F(upper_bottom))] = L(r1 || r2 || r3), where
/// upper_top = r1 1^(a+2) 0^(b+2) r3 and upper_bottom = r1 1^(a+1) 0 1 0^(b+1) r3
/// for a, b the numbers of 1s and 0s in r2.
struct Relation {
  int n = 0;
  int r = 0;
  Interval2 diamond;
  BitSeq upper_top;
  BitSeq upper_bottom;
  Int tau;

  BiPoly lhs() const;
  BiPoly rhs() const;
  /// Combination of the T(F(s)) over S(n,r) (canonical order) that vanishes.
  RatVector vector() const;
};

std::vector<Relation> relation_generators(int n, int r);

struct KernelReport {
  std::size_t symbols = 0;
  std::size_t kernel_dim = 0;  // nullity of the Sp image matrix
  std::size_t sz_rank = 0;
  std::size_t expected = 0;    // C(n,r) - r(n-r) - 1
  bool sz_in_kernel = false;
  bool ok() const { return sz_in_kernel && kernel_dim == expected && sz_rank == expected; }
};

KernelReport kernel_check(int n, int r);

struct GirthSubspace {
  std::vector<BitSeq> basis;      // meet-irreducibles starting with 1^(k-1)
  std::size_t basis_rank = 0;
  std::size_t filtered_rank = 0;  // rank over all freedom matroids of girth >= k
  std::size_t expected = 0;       // (n-r)(r-k+1)+1
  bool ok() const {
    return basis.size() == expected && basis_rank == expected && filtered_rank == expected;
  }
};

/// Throws std::domain_error unless 1 <= k <= r.
GirthSubspace girth_subspace(int n, int r, int k);

}  // namespace gtutte

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtutte/corpus.hpp"
#include "gtutte/ginv.hpp"
#include "gtutte/linbases.hpp"
#include "gtutte/tutte.hpp"
#include "oracles.hpp"

using namespace gtutte;

namespace {
BitSeq B(const char* s) { return BitSeq::parse(s); }
BiPoly P(const char* s) { return parse_bipoly(s); }

BiPoly T(const char* s) { return tutte_freedom(B(s)).poly; }

std::vector<std::string> strs(const std::vector<BitSeq>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

// Rank of the oracle-computed coefficient grids of the given sequences.
std::size_t oracle_rank(const std::vector<BitSeq>& seqs, int n, int r) {
  std::vector<RatVector> cols;
  for (const auto& s : seqs) {
    const BiPoly t = oracle::tutte(oracle::freedom_bases(s.str()));
    RatVector v;
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= n - r; ++j) v.push_back(t.coeff(i, j));
    }
    cols.push_back(v);
  }
  return rank(RatMatrix::from_columns(cols, static_cast<std::size_t>((r + 1) * (n - r + 1))));
}
}  // namespace

TEST_CASE("monomial order") {
  std::vector<std::string> labels;
  for (const auto& m : monomial_order(5, 3)) labels.push_back(monomial_label(m));
  CHECK(labels == std::vector<std::string>{"x^3*y^0", "x^2*y^0", "x^1*y^0", "x^3*y^1", "x^2*y^1", "x^1*y^1",
                                           "x^3*y^2", "x^0*y^1", "x^0*y^2", "x^2*y^2", "x^1*y^2"});
  // Every nonconstant cell of the grid appears once.
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(monomial_order(n, r).size() == static_cast<std::size_t>((r + 1) * (n - r + 1) - 1));
  }
  CHECK_THROWS_AS(monomial_order(3, 4), std::domain_error);
}

TEST_CASE("gamma matrix") {
  const LabeledMatrix g = gamma_matrix(5, 3);
  CHECK(g.col_labels == std::vector<std::string>{"11100", "11001", "10011", "01110", "01101", "01011", "00111"});
  CHECK(g.matrix.rows() == 11);
  CHECK(rank(g.matrix) == 7);
  const std::vector<std::vector<int>> printed{
      {1, 1, 1, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0, 0}, {3, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0},
      {0, 0, 1, 1, 1, 0, 0}, {0, 2, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1}, {3, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 0, 0}};
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 7; ++j) CHECK(g.matrix(i, j) == printed[i][j]);
  }
  const LabeledMatrix g21 = gamma_matrix(2, 1);
  CHECK(g21.col_labels == std::vector<std::string>{"10", "01"});
  CHECK(rank(g21.matrix) == 2);
  for (int n = 2; n <= 9; ++n) {
    for (int r = 1; r < n; ++r) {
      const BlockCheck bc = check_block_structure(n, r);
      CHECK_MESSAGE(bc.ok, bc.detail);
      CHECK(rank(gamma_matrix(n, r).matrix) == static_cast<std::size_t>(r * (n - r) + 1));
    }
  }
}

TEST_CASE("dimension of the Tutte span") {
  CHECK(tutte_space_dim(5, 3) == 7);
  CHECK(tutte_space_dim(4, 2) == 5);
  for (int n = 0; n <= 6; ++n) CHECK(tutte_space_dim(n, 0) == 1);
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      const std::size_t want = static_cast<std::size_t>(r) * (n - r) + 1;
      CHECK(tutte_space_dim(n, r) == want);
      CHECK(oracle_rank(enumerate(n, r), n, r) == want);
      CHECK(oracle_rank(enumerate_join_irr(n, r), n, r) == want);
      CHECK(oracle_rank(enumerate_meet_irr(n, r), n, r) == want);
    }
  }
  // (4,2): six polynomials with a one-dimensional kernel.
  CHECK(nullspace(coefficient_matrix(enumerate(4, 2), 4, 2)).size() == 1);
}

TEST_CASE("basis sequences") {
  auto meet = strs(basis_sequences(5, 3, BasisKind::Meet));
  CHECK(meet == std::vector<std::string>{"00111", "01110", "10011", "10110", "11001", "11010", "11100"});
  CHECK(basis_sequences(5, 3, BasisKind::Join) == gamma_columns(5, 3));
}

TEST_CASE("expressions in the bases") {
  const auto e1 = express_in_basis(T("10101"), BasisKind::Meet, 5, 3);
  REQUIRE(e1.in_span());
  const std::map<BitSeq, Rat> want1{{B("11001"), 1}, {B("10110"), 1}, {B("11010"), -2}, {B("11100"), 1}};
  CHECK(*e1.coords == want1);
  const auto e2 = express_in_basis(T("01011"), BasisKind::Meet, 5, 3);
  const std::map<BitSeq, Rat> want2{{B("01110"), 1}, {B("10011"), 1}, {B("10110"), -2}, {B("11010"), 1}};
  CHECK(*e2.coords == want2);
  CHECK(e2.residual.is_zero());

  const auto out = express_in_basis(P("x+y"), BasisKind::Meet, 4, 2);
  CHECK_FALSE(out.in_span());
  CHECK_FALSE(out.residual.is_zero());
  CHECK_FALSE(express_in_basis(P("x^2 + 1"), BasisKind::Join, 4, 2).in_span());
  CHECK_FALSE(express_in_basis(P("x^5"), BasisKind::Join, 4, 2).in_span());

  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (BasisKind kind : {BasisKind::Meet, BasisKind::Join}) {
        for (const auto& m : basis_sequences(n, r, kind)) {
          const auto e = express_in_basis(tutte_freedom(m).poly, kind, n, r);
          CHECK(*e.coords == std::map<BitSeq, Rat>{{m, 1}});
        }
        for (const auto& s : enumerate(n, r)) {
          const auto e = express_in_basis(tutte_freedom(s).poly, kind, n, r);
          REQUIRE(e.in_span());
          BiPoly back;
          for (const auto& [t, c] : *e.coords) back += c * tutte_freedom(t).poly;
          CHECK(back == tutte_freedom(s).poly);
          if (kind == BasisKind::Meet) {
            for (const auto& [t, c] : *e.coords) {
              CHECK(is_integer(c));
              CHECK(dominates(t, s));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("straightening matroids") {
  CHECK(straighten_matroid(FreedomMatroid(B("10101"))) ==
        *express_in_basis(T("10101"), BasisKind::Meet, 5, 3).coords);
  for (int r = 1; r <= 4; ++r) {
    const BitSeq u = BitSeq::block(1, r) + BitSeq::block(0, 3);
    CHECK(straighten_matroid(FreedomMatroid(u)) == std::map<BitSeq, Rat>{{u, 1}});
  }
  // Only meet-irreducibles from the support of G(M) are used.
  for (const auto& m : random_corpus(30, 6, 31)) {
    const auto coords = straighten_matroid(m);
    const auto supp = support(m);
    for (const auto& [t, c] : coords) {
      CHECK(is_meet_irreducible(t));
      CHECK(std::binary_search(supp.begin(), supp.end(), t));
    }
  }
}

TEST_CASE("relation generators") {
  const auto r42 = relation_generators(4, 2);
  REQUIRE(r42.size() == 1);
  CHECK(r42[0].upper_top == B("1100"));
  CHECK(r42[0].upper_bottom == B("1010"));
  CHECK(r42[0].tau == 1);
  CHECK(r42[0].lhs() == T("1100") - T("1010"));
  CHECK(r42[0].rhs() == T("1010") - T("1001") - T("0110") + T("0101"));
  CHECK(r42[0].lhs() == r42[0].rhs());

  bool found = false;
  for (const auto& rel : relation_generators(5, 2)) {
    if (rel.diamond.top() == B("10010")) {
      found = true;
      CHECK(rel.upper_top == B("11000"));
      CHECK(rel.upper_bottom == B("10100"));
      CHECK(rel.lhs() == rel.rhs());
    }
  }
  CHECK(found);

  const auto r53 = relation_generators(5, 3);
  CHECK(r53.size() == 3);
  std::vector<RatVector> vecs;
  for (const auto& rel : r53) vecs.push_back(rel.vector());
  CHECK(rank(RatMatrix::from_columns(vecs, 10)) == 3);

  for (int n = 4; n <= 7; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      const auto all = enumerate(n, r);
      std::vector<RatVector> v;
      for (const auto& rel : relation_generators(n, r)) {
        CHECK(rel.lhs() == rel.rhs());
        v.push_back(rel.vector());
        // The vector really is a relation among the T(F(s)).
        BiPoly sum;
        for (std::size_t i = 0; i < all.size(); ++i) sum += rel.vector()[i] * tutte_freedom(all[i]).poly;
        CHECK(sum.is_zero());
      }
      CHECK(rank(RatMatrix::from_columns(v, all.size())) == all.size() - r * (n - r) - 1);
    }
  }
}

TEST_CASE("kernel of the specialization") {
  const KernelReport k42 = kernel_check(4, 2);
  CHECK(k42.kernel_dim == 1);
  CHECK(k42.sz_rank == 1);
  const KernelReport k53 = kernel_check(5, 3);
  CHECK(k53.kernel_dim == 3);
  CHECK(k53.sz_rank == 3);
  CHECK(k53.ok());
  CHECK(kernel_check(4, 4).kernel_dim == 0);
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r < n; ++r) CHECK(kernel_check(n, r).ok());
  }
}

TEST_CASE("girth subspaces") {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r < n; ++r) {
      const GirthSubspace g1 = girth_subspace(n, r, 1);
      CHECK(g1.basis == enumerate_meet_irr(n, r));
      CHECK(g1.basis_rank == static_cast<std::size_t>(r * (n - r) + 1));
      if (r >= 2) CHECK(girth_subspace(n, r, 2).basis_rank == static_cast<std::size_t>((n - r) * (r - 1) + 1));
      if (r >= 3) CHECK(girth_subspace(n, r, 3).basis_rank == static_cast<std::size_t>((n - r) * (r - 2) + 1));
      for (int k = 1; k <= r; ++k) {
        const GirthSubspace g = girth_subspace(n, r, k);
        CHECK(g.ok());
        // The filtered rank from the oracle agrees.
        std::vector<BitSeq> filtered;
        for (const auto& s : enumerate(n, r)) {
          if (girth(FreedomMatroid(s)) >= k) filtered.push_back(s);
        }
        CHECK(oracle_rank(filtered, n, r) == g.expected);
      }
    }
  }
  CHECK_THROWS_AS(girth_subspace(5, 3, 0), std::domain_error);
  CHECK_THROWS_AS(girth_subspace(5, 3, 4), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "gtutte/brylawski.hpp"
#include "gtutte/corpus.hpp"
#include "gtutte/tutte.hpp"
#include "oracles.hpp"

using namespace gtutte;

namespace {
BitSeq B(const char* s) { return BitSeq::parse(s); }
BiPoly P(const char* s) { return parse_bipoly(s); }

// Coefficient map {(i,j): c} of a linear functional on an (n,r) grid.
std::map<std::pair<int, int>, Rat> functional(int n, int r, const std::function<Rat(const CoeffGrid&)>& f) {
  std::map<std::pair<int, int>, Rat> out;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= n - r; ++j) {
      CoeffGrid g(n, r);
      g.set(i, j, 1);
      const Rat v = f(g);
      if (v != 0) out[{i, j}] = v;
    }
  }
  return out;
}
}  // namespace

TEST_CASE("coefficient grids") {
  const CoeffGrid g = CoeffGrid::from_poly(P("x^3 + 2x^2 + 3x + 3y + y^2"), 5, 3);
  CHECK(g.at(1, 0) == 3);
  CHECK(g.at(0, 2) == 1);
  CHECK(g.at(7, 7) == 0);
  CHECK(g.at(-1, 0) == 0);
  CHECK(g.cells() == 12);
  CHECK(g.flatten()[1 * 3 + 0] == 3);
  CHECK(fits(P("x^3 y^2"), 5, 3));
  CHECK_FALSE(fits(P("x^4"), 5, 3));
  const CoeffGrid s = g.shifted(1, 2);
  CHECK(s.n() == 8);
  CHECK(s.r() == 4);
  CHECK(s.at(2, 2) == 3);
  CHECK(s.at(1, 4) == 1);
}

TEST_CASE("J examples") {
  CHECK(functional(6, 3, [](const CoeffGrid& g) { return J(0, g); }) ==
        std::map<std::pair<int, int>, Rat>{{{0, 0}, 1}});
  const std::map<std::pair<int, int>, Rat> j2{{{0, 0}, 1}, {{0, 1}, -2}, {{0, 2}, 1},
                                              {{1, 0}, 1}, {{1, 1}, -1}, {{2, 0}, 1}};
  CHECK(functional(6, 3, [](const CoeffGrid& g) { return J(2, g); }) == j2);
  // J_vector is the same functional in flattened form.
  for (int m = 0; m < 6; ++m) {
    const RatVector v = J_vector(m, 6, 3);
    for (const auto& [cell, c] : functional(6, 3, [m](const CoeffGrid& g) { return J(m, g); })) {
      CHECK(v[static_cast<std::size_t>(cell.first * 4 + cell.second)] == c);
    }
  }
  CHECK_THROWS_AS(J(-1, CoeffGrid(3, 1)), std::domain_error);
}

TEST_CASE("hook examples") {
  const std::map<std::pair<int, int>, Rat> h400{{{4, 0}, 1}, {{3, 0}, 1}, {{2, 0}, 1}, {{1, 0}, 1}, {{0, 0}, 1},
                                                {{0, 1}, -4}, {{0, 2}, 6}, {{0, 3}, -4}, {{0, 4}, 1}};
  CHECK(functional(8, 4, [](const CoeffGrid& g) { return hook(4, 0, 0, g); }) == h400);
  const std::map<std::pair<int, int>, Rat> h421{{{3, 1}, 1}, {{2, 1}, 2}, {{2, 2}, -1}};
  CHECK(functional(8, 4, [](const CoeffGrid& g) { return hook(4, 2, 1, g); }) == h421);
  CHECK_THROWS_AS(hook(2, 2, 1, CoeffGrid(4, 2)), std::domain_error);
  CHECK_THROWS_AS(centered_hook(2, -1, 1, CoeffGrid(4, 2)), std::domain_error);
}

TEST_CASE("hooks against J on shifted grids") {
  // For a grid supported on the hook through (d,a): J_m = (-1)^a H_m(d,a),
  // and the centered hook of g is the hook of x^d y^a g.
  for (int m = 0; m <= 6; ++m) {
    for (int d = 0; d <= m; ++d) {
      for (int a = 0; d + a <= m; ++a) {
        const int n = m + 2;
        const int r = std::min(n - 1, m);
        CoeffGrid g(n, r);
        if (d > r || a > n - r) continue;
        for (int j = d; j <= r; ++j) g.set(j, a, j + 1);
        for (int k = a; k <= n - r; ++k) g.set(d, k, 2 * k - 3);
        const Rat sign = a % 2 == 0 ? 1 : -1;
        CHECK(J(m, g) == sign * hook(m, d, a, g));
      }
    }
  }
  const CoeffGrid g = CoeffGrid::from_poly(tutte_uniform(3, 2).poly, 5, 3);
  for (int m = 0; m <= 5; ++m) {
    for (int d = 0; d <= 2; ++d) {
      for (int a = 0; d + a <= m && a <= 2; ++a) {
        CHECK(centered_hook(m, d, a, g) == hook(m, d, a, g.shifted(d, a)));
      }
    }
  }
}

TEST_CASE("sat values") {
  const CoeffGrid u59 = CoeffGrid::from_poly(P("x^5 + 4x^4 + 10x^3 + 20x^2 + 35x + 35y + 15y^2 + 5y^3 + y^4"), 9, 5);
  const auto vals = verify_sat(u59);
  CHECK(vals.size() == 9);
  for (const auto& v : vals) CHECK(v.value == 0);
  const auto loop = verify_sat(CoeffGrid::from_poly(BiPoly::y(), 1, 0));
  REQUIRE(loop.size() == 1);
  CHECK(loop[0].value == 0);
  for (const auto& v : verify_sat(CoeffGrid::from_poly(tutte_freedom(B("10110")).poly, 5, 3))) CHECK(v.value == 0);
  // A non-Tutte grid violates J_0.
  CHECK(verify_sat(CoeffGrid::from_poly(P("1 + x"), 2, 1))[0].value == 1);

  for (const auto& m : random_corpus(60, 7, 77)) {
    const CoeffGrid g = CoeffGrid::from_poly(oracle::tutte_dc(m.size(), m.bases()), m.size(), m.rank());
    for (const auto& v : verify_sat(g)) CHECK(v.value == 0);
  }
}

TEST_CASE("relation space") {
  const RelationSpaceReport r42 = relation_nullspace_check(4, 2);
  CHECK(r42.relation_dim == 4);
  CHECK(r42.ok());
  const RelationSpaceReport r53 = relation_nullspace_check(5, 3);
  CHECK(r53.relation_dim == 5);
  CHECK(r53.ok());
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(relation_nullspace_check(n, r).ok());
  }
  // J_k is the first to involve t_{k0}.
  for (int k = 0; k < 6; ++k) {
    CHECK(J_vector(k, 6, 6)[static_cast<std::size_t>(k)] != 0);
    for (int m = 0; m < k; ++m) CHECK(J_vector(m, 6, 6)[static_cast<std::size_t>(k)] == 0);
  }
}

TEST_CASE("girth support") {
  CHECK(girth_support_check(CoeffGrid::from_poly(tutte_uniform(3, 2).poly, 5, 3), 4));
  CHECK_FALSE(girth_support_check(CoeffGrid::from_poly(tutte_freedom(B("00111")).poly, 5, 3), 2));
  CHECK(girth_support_check(CoeffGrid(5, 3), 3));
  CHECK_THROWS_AS(girth_support_check(CoeffGrid(5, 3), 0), std::domain_error);
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; r < n; ++r) {
      for (const auto& s : enumerate(n, r)) {
        const int g = girth(FreedomMatroid(s));
        const CoeffGrid grid = CoeffGrid::from_poly(tutte_freedom(s).poly, n, r);
        for (int k = 1; k <= std::min(g, r + 1); ++k) CHECK(girth_support_check(grid, k));
      }
    }
  }
  for (int n = 3; n <= 7; ++n) {
    for (int r = 2; r < n; ++r) {
      for (int k = 1; k <= r; ++k) CHECK(girth_relation_check(n, r, k).ok());
    }
  }
}

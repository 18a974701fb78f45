#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtutte/corpus.hpp"
#include "gtutte/ginv.hpp"
#include "gtutte/tutte.hpp"
#include "oracles.hpp"

using namespace gtutte;

namespace {
BitSeq B(const char* s) { return BitSeq::parse(s); }
BiPoly P(const char* s) { return parse_bipoly(s); }

GInv from_oracle(int n, int r, const std::map<std::string, long>& counts) {
  GInv v(n, r);
  for (const auto& [s, c] : counts) v.add(BitSeq::parse(s), Rat(c));
  return v;
}

GInv from_ints(int n, int r, const std::map<BitSeq, Int>& comb) {
  GInv v(n, r);
  for (const auto& [s, c] : comb) v.add(s, Rat(c));
  return v;
}
}  // namespace

TEST_CASE("G-space elements") {
  GInv v(2, 1);
  v.add(B("10"), 1);
  v.add(B("01"), 2);
  v.add(B("10"), -1);
  CHECK(v.coeffs.size() == 1);
  CHECK(v.coeff(B("01")) == 2);
  CHECK(v.coeff(B("10")) == 0);
  CHECK_THROWS_AS(v.add(B("11"), 1), std::domain_error);
  CHECK_THROWS_AS(v.add(B("100"), 1), std::domain_error);
  CHECK((v - v).is_zero());
  CHECK(Rat(3) * GInv::symbol(B("10")) == GInv::symbol(B("10"), 3));
}

TEST_CASE("rank sequences") {
  const FreedomMatroid f01(B("01"));
  CHECK(rank_sequence(f01, std::vector<int>{1, 2}) == B("01"));
  CHECK(rank_sequence(f01, std::vector<int>{2, 1}) == B("10"));
  CHECK(rank_sequence(FreedomMatroid(B("11")), std::vector<int>{2, 1}) == B("11"));
  CHECK(rank_sequence(FreedomMatroid(B("00111")), std::vector<int>{1, 2, 3, 4, 5}) == B("00111"));
  CHECK_THROWS_AS(rank_sequence(f01, std::vector<int>{1, 1}), std::domain_error);
  CHECK_THROWS_AS(rank_sequence(f01, std::vector<int>{1}), std::domain_error);
  CHECK_THROWS_AS(rank_sequence(f01, std::vector<int>{1, 3}), std::domain_error);
}

TEST_CASE("G-invariant examples") {
  CHECK(g_invariant(FreedomMatroid(B("10"))) == GInv::symbol(B("10"), 2));
  CHECK(g_invariant(FreedomMatroid(B("01"))) == GInv::symbol(B("01")) + GInv::symbol(B("10")));
  CHECK(g_invariant(FreedomMatroid(B("1100"))) == GInv::symbol(B("1100"), 24));
  const GInv g0011 = g_invariant(FreedomMatroid(B("0011")));
  for (const auto& s : enumerate(4, 2)) CHECK(g0011.coeff(s) == 4);
}

TEST_CASE("G-invariant against permutation sweep of the oracle") {
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& s : enumerate(n, r)) {
        const GInv g = g_invariant(FreedomMatroid(s));
        CHECK(g == from_oracle(n, r, oracle::g_invariant(oracle::freedom_bases(s.str()))));
        Rat total = 0;
        for (const auto& [t, c] : g.coeffs) total += c;
        CHECK(total == Rat(factorial(n)));
      }
    }
  }
  for (const auto& m : random_corpus(25, 6, 17)) {
    oracle::Bases ref{m.size(), m.bases()};
    CHECK(g_invariant(m) == from_oracle(m.size(), m.rank(), oracle::g_invariant(ref)));
  }
}

TEST_CASE("support") {
  CHECK(support(FreedomMatroid(B("000111"))) == enumerate(6, 3));
  CHECK(support(FreedomMatroid(B("11100"))) == std::vector<BitSeq>{B("11100")});
  auto filter = [](const std::vector<BitSeq>& supp, int n, int r) {
    for (const auto& t : supp) {
      for (const auto& s : enumerate(n, r)) {
        if (dominates(s, t) && !std::binary_search(supp.begin(), supp.end(), s)) return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& s : enumerate(n, r)) {
        const auto supp = support(FreedomMatroid(s));
        CHECK(std::is_sorted(supp.begin(), supp.end()));
        CHECK(filter(supp, n, r));
        // The defining sequence is the minimum of its own support.
        CHECK(supp.front() == s);
      }
    }
  }
  for (const auto& m : random_corpus(30, 6, 4)) CHECK(filter(support(m), m.size(), m.rank()));
}

TEST_CASE("specialization of symbols") {
  CHECK(sp_symbol(B("1")) == BiPoly::x());
  CHECK(sp_symbol(B("0")) == BiPoly::y());
  CHECK(sp_symbol(B("10")) == P("(1/2)x + (1/2)y"));
  CHECK(sp_symbol(B("01")) == P("(1/2)x + (1/2)y + xy - x - y"));
  CHECK(sp(g_invariant(FreedomMatroid(B("01")))) == P("xy"));
  CHECK(sp(g_invariant(FreedomMatroid(B("11100")))) == P("x^3+2x^2+3x+3y+y^2"));
  CHECK(sp(GInv(3, 1)).is_zero());
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& s : enumerate(n, r)) CHECK(sp_symbol(s) == oracle::sp_symbol(s.str()));
    }
  }
}

TEST_CASE("cornerstone differences") {
  CHECK(cornerstone_diff(0, 0, 2, 1) == BiPoly::curve());
  CHECK(cornerstone_diff(1, 1, 4, 2) == Rat(1, 4) * BiPoly::curve());
  CHECK(cornerstone_diff(1, 1, 4, 2) == sp_symbol(B("1100")) - sp_symbol(B("1010")));
  CHECK_THROWS_AS(cornerstone_diff(3, 0, 4, 2), std::domain_error);
  CHECK_THROWS_AS(cornerstone_diff(0, 1, 4, 2), std::domain_error);
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r < n; ++r) {
      for (const auto& s : enumerate(n, r)) {
        for (int pos : descents(s)) {
          const BitSeq t = s.swap_adjacent(pos - 1);
          const int lambda = pos - 2;
          const int rho = lambda == 0 ? 0 : s.slice(1, lambda).weight();
          const BiPoly d = cornerstone_diff(lambda, rho, n, r);
          CHECK(d == sp_symbol(s) - sp_symbol(t));
          CHECK((Rat(factorial(lambda + 1) * factorial(n - lambda - 1)) * d).eval(2, 2) == 0);
        }
      }
    }
  }
}

TEST_CASE("syzygies of height-2 intervals") {
  const auto iv = height2_intervals(4, 2).front();
  const GInv want = GInv::symbol(B("1010")) - GInv::symbol(B("1001")) - GInv::symbol(B("0110")) +
                    GInv::symbol(B("0101"));
  CHECK(sz(iv) == want);
  for (const auto& i : height2_intervals(5, 2)) {
    if (i.top() == B("10010")) {
      CHECK(sz(i) == GInv::symbol(B("10010")) - GInv::symbol(B("10001")) - GInv::symbol(B("01010")) +
                         GInv::symbol(B("01001")));
    }
  }
  for (int n = 4; n <= 7; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      for (const auto& i : height2_intervals(n, r)) CHECK(sp(sz(i)).is_zero());
    }
  }
}

TEST_CASE("the (4,2) matrix") {
  const GMatrix& g = g_matrix(4, 2);
  const std::vector<std::vector<int>> want{{4, 0, 0, 0, 0, 0},  {4, 2, 0, 0, 0, 0},    {4, 4, 6, 0, 0, 0},
                                           {4, 4, 0, 6, 0, 0},  {4, 6, 6, 6, 4, 0},    {4, 8, 12, 12, 20, 24}};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) CHECK(g.forward(i, j) == want[i][j]);
  }
  CHECK(g.inverse(5, 4) == Rat(-5, 24));
  CHECK(g.forward * g.inverse == RatMatrix::identity(6));
  CHECK(rank(g.forward) == 6);
  CHECK(g_matrix(3, 3).forward == [] {
    RatMatrix m(1, 1);
    m(0, 0) = 6;
    return m;
  }());
}

TEST_CASE("matrix entries, triangularity and the flag formula for the diagonal, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const GMatrix& g = g_matrix(n, r);
      for (std::size_t j = 0; j < g.order.size(); ++j) {
        const auto col = oracle::g_invariant(oracle::freedom_bases(g.order[j].str()));
        for (std::size_t i = 0; i < g.order.size(); ++i) {
          const auto it = col.find(g.order[i].str());
          CHECK(g.forward(i, j) == (it == col.end() ? 0 : it->second));
          if (g.forward(i, j) != 0) CHECK(dominates(g.order[i], g.order[j]));
        }
        CHECK(g.forward(j, j) == Rat(diagonal_by_flags(g.order[j])));
      }
    }
  }
}

TEST_CASE("expansion in the freedom basis") {
  const auto c = freedom_expansion(GInv::symbol(B("0011")));
  const std::map<BitSeq, Rat> want{{B("0011"), Rat(1, 4)}, {B("0101"), Rat(-1, 2)}, {B("0110"), Rat(1, 6)},
                                   {B("1001"), Rat(1, 6)}, {B("1100"), Rat(-1, 24)}};
  CHECK(c == want);
  for (const auto& t : enumerate(5, 2)) {
    CHECK(freedom_expansion(g_invariant(FreedomMatroid(t))) == std::map<BitSeq, Rat>{{t, 1}});
  }
  Rng rng(2024);
  for (int k = 0; k < 10; ++k) {
    const BasisListMatroid m = random_linear_matroid(6, 3, 2 + (k % 2), rng);
    const GInv v = g_invariant(m);
    GInv back(v.n, v.r);
    for (const auto& [s, coef] : freedom_expansion(v)) back += coef * g_invariant(FreedomMatroid(s));
    CHECK(back == v);
  }
}

TEST_CASE("straightening symbols") {
  CHECK(straighten_symbol(B("11010"), Side::Meet) == std::map<BitSeq, Int>{{B("11010"), 1}});
  CHECK(straighten_symbol(B("01101"), Side::Join) == std::map<BitSeq, Int>{{B("01101"), 1}});
  const std::map<BitSeq, Int> want{{B("1001"), 1}, {B("0110"), 1}, {B("1010"), -1}};
  CHECK(straighten_symbol(B("0101"), Side::Meet) == want);

  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r < n; ++r) {
      for (const auto& s : enumerate(n, r)) {
        for (Side side : {Side::Meet, Side::Join}) {
          const auto comb = straighten_symbol(s, side);
          for (const auto& [t, c] : comb) {
            CHECK(c != 0);
            CHECK((side == Side::Meet ? is_meet_irreducible(t) : is_join_irreducible(t)));
            if (side == Side::Meet) CHECK(dominates(t, s));
          }
          // Congruent modulo ker Sp.
          CHECK(sp(from_ints(n, r, comb)) == sp_symbol(s));
        }
      }
    }
  }
}

#include "gtutte/brylawski.hpp"

#include <stdexcept>

#include "gtutte/matroid.hpp"
#include "gtutte/seqlat.hpp"
#include "gtutte/tutte.hpp"

namespace gtutte {

namespace {

void check_hook(int m, int d, int a) {
  if (d < 0 || a < 0 || d + a > m) throw std::domain_error("hook needs 0 <= d + a <= m");
}

Rat sign(int k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

RelationSpaceReport relation_report(int n, int r, const std::vector<BitSeq>& seqs,
                                    std::vector<RatVector> generators, std::size_t expected) {
  RelationSpaceReport rep;
  rep.n = n;
  rep.r = r;
  rep.cells = static_cast<std::size_t>(r + 1) * (n - r + 1);
  rep.expected = expected;
  RatMatrix grids(seqs.size(), rep.cells);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const RatVector row = CoeffGrid::from_poly(tutte_freedom(seqs[i]).poly, n, r).flatten();
    for (std::size_t j = 0; j < rep.cells; ++j) grids(i, j) = row[j];
  }
  rep.relation_dim = rep.cells - rank(grids);
  rep.generators_vanish = true;
  for (const auto& v : generators) {
    if (!is_zero(grids * v)) rep.generators_vanish = false;
  }
  rep.generator_rank = generators.empty() ? 0 : rank(RatMatrix::from_columns(generators, rep.cells));
  return rep;
}

}  // namespace

CoeffGrid::CoeffGrid(int n, int r) : n_(n), r_(r) {
  if (n < 0 || r < 0 || r > n) throw std::domain_error("grid needs 0 <= r <= n");
  t_.resize(static_cast<std::size_t>(r + 1) * (n - r + 1));
}

CoeffGrid CoeffGrid::from_poly(const BiPoly& p, int n, int r) {
  CoeffGrid g(n, r);
  for (const auto& [m, c] : p.terms()) {
    if (m.x_exp <= r && m.y_exp <= n - r) g.set(m.x_exp, m.y_exp, c);
  }
  return g;
}

Rat CoeffGrid::at(int i, int j) const {
  if (i < 0 || j < 0 || i > r_ || j > n_ - r_) return 0;
  return t_[static_cast<std::size_t>(i) * (n_ - r_ + 1) + j];
}

void CoeffGrid::set(int i, int j, const Rat& v) {
  if (i < 0 || j < 0 || i > r_ || j > n_ - r_) throw std::out_of_range("cell outside the grid");
  t_[static_cast<std::size_t>(i) * (n_ - r_ + 1) + j] = v;
}

CoeffGrid CoeffGrid::shifted(int d, int a) const {
  CoeffGrid out(n_ + d + a, r_ + d);
  for (int i = 0; i <= r_; ++i) {
    for (int j = 0; j <= n_ - r_; ++j) out.set(i + d, j + a, at(i, j));
  }
  return out;
}

RatVector CoeffGrid::flatten() const { return t_; }

bool fits(const BiPoly& p, int n, int r) {
  for (const auto& [m, c] : p.terms()) {
    if (m.x_exp > r || m.y_exp > n - r) return false;
  }
  return true;
}

Rat J(int m, const CoeffGrid& g) {
  if (m < 0) throw std::domain_error("J_m needs m >= 0");
  Rat total = 0;
  for (int alpha = 0; alpha <= m; ++alpha) {
    for (int beta = 0; beta <= alpha; ++beta) {
      const Rat t = g.at(m - alpha, beta);
      if (t != 0) total += sign(beta) * Rat(binomial(alpha, beta)) * t;
    }
  }
  return total;
}

RatVector J_vector(int m, int n, int r) {
  // Coefficient of t_ij in J_m is (-1)^j C(m-i, j).
  CoeffGrid g(n, r);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= n - r; ++j) {
      if (i + j <= m) g.set(i, j, sign(j) * Rat(binomial(m - i, j)));
    }
  }
  return g.flatten();
}

Rat hook(int m, int d, int a, const CoeffGrid& g) {
  check_hook(m, d, a);
  const int len = m - d - a;
  Rat total = Rat(binomial(m - d, a)) * g.at(d, a);
  for (int j = 1; j <= len; ++j) total += Rat(binomial(m - d - j, a)) * g.at(j + d, a);
  for (int k = 1; k <= len; ++k) total += sign(k) * Rat(binomial(m - d, a + k)) * g.at(d, a + k);
  return total;
}

Rat centered_hook(int m, int d, int a, const CoeffGrid& g) {
  check_hook(m, d, a);
  Rat total = Rat(binomial(m - d, a)) * g.at(0, 0);
  for (int j = 1; j <= m - d; ++j) total += Rat(binomial(m - d - j, a)) * g.at(j, 0);
  for (int k = 1; k <= m - d; ++k) total += sign(k) * Rat(binomial(m - d, a + k)) * g.at(0, k);
  return total;
}

std::vector<SatValue> verify_sat(const CoeffGrid& g) {
  std::vector<SatValue> out;
  for (int m = 0; m < g.n(); ++m) out.push_back({m, J(m, g)});
  return out;
}

RelationSpaceReport relation_nullspace_check(int n, int r) {
  std::vector<RatVector> gens;
  for (int m = 0; m < n; ++m) gens.push_back(J_vector(m, n, r));
  return relation_report(n, r, enumerate(n, r), std::move(gens), static_cast<std::size_t>(n));
}

bool girth_support_check(const CoeffGrid& g, int k) {
  if (k < 1) throw std::domain_error("girth bound needs k >= 1");
  const int r = g.r();
  const int nr = g.n() - r;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= nr; ++j) {
      if (g.at(i, j) == 0) continue;
      const bool allowed = (j == 0 && i >= 1) || (j >= 1 && i <= r - k + 1);
      if (!allowed) return false;
    }
  }
  return true;
}

RelationSpaceReport girth_relation_check(int n, int r, int k) {
  if (k < 1 || k > r) throw std::domain_error("girth_relation_check needs 1 <= k <= r");
  std::vector<BitSeq> seqs;
  for (const auto& s : enumerate(n, r)) {
    if (girth(FreedomMatroid(s)) >= k) seqs.push_back(s);
  }
  std::vector<RatVector> gens;
  for (int m = 0; m < n; ++m) gens.push_back(J_vector(m, n, r));
  for (int i = r - k + 2; i <= r; ++i) {
    for (int j = 1; j <= n - r; ++j) {
      CoeffGrid unit(n, r);
      unit.set(i, j, 1);
      gens.push_back(unit.flatten());
    }
  }
  const std::size_t expected = static_cast<std::size_t>(n) + static_cast<std::size_t>(k - 1) * (n - r);
  return relation_report(n, r, seqs, std::move(gens), expected);
}

}  // namespace gtutte

#include "gtutte/linbases.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtutte/ginv.hpp"
#include "gtutte/tutte.hpp"

namespace gtutte {

namespace {

void check_params(int n, int r) {
  if (n < 0 || r < 0 || r > n) throw std::domain_error("need 0 <= r <= n");
}

BiPoly combination(const std::map<BitSeq, Rat>& coords) {
  BiPoly out;
  for (const auto& [s, c] : coords) out += c * tutte_freedom(s).poly;
  return out;
}

std::size_t column_rank(const std::vector<RatVector>& columns, std::size_t rows) {
  if (columns.empty()) return 0;
  return rank(RatMatrix::from_columns(columns, rows));
}

// Solves the first r(n-r)+1 rows of Gamma block by block. Returns nullopt if
// the block shape does not hold, in which case the caller falls back to rref.
std::optional<RatVector> solve_join_blocks(const RatMatrix& g, const RatVector& rhs, int n, int r) {
  if (!check_block_structure(n, r).ok) return std::nullopt;
  const std::size_t size = static_cast<std::size_t>(r) * (n - r) + 1;
  RatVector c(size);
  for (int blk = 0; blk < n - r; ++blk) {
    const std::size_t base = static_cast<std::size_t>(blk) * r;
    // Row base+p of the block reaches columns base..base+r-1-p, so the last
    // row determines the first column, and so on upwards.
    for (int q = 0; q < r; ++q) {
      const std::size_t row = base + (r - 1 - q);
      Rat acc = rhs[row];
      for (std::size_t j = 0; j < base + q; ++j) acc -= g(row, j) * c[j];
      c[base + q] = acc / g(row, base + q);
    }
  }
  const std::size_t last = size - 1;
  Rat acc = rhs[last];
  for (std::size_t j = 0; j < last; ++j) acc -= g(last, j) * c[j];
  c[last] = acc / g(last, last);
  return c;
}

// Solves B c = rhs using a maximal independent set of rows of B (B has full
// column rank).
RatVector solve_by_rows(const RatMatrix& b, const RatVector& rhs) {
  const RowEchelon rows = rref(b.transpose());
  RatMatrix square(b.cols(), b.cols() + 1);
  for (std::size_t i = 0; i < rows.rank; ++i) {
    const std::size_t src = rows.pivots[i];
    for (std::size_t j = 0; j < b.cols(); ++j) square(i, j) = b(src, j);
    square(i, b.cols()) = rhs[src];
  }
  const RowEchelon e = rref(square);
  RatVector c(b.cols());
  for (std::size_t i = 0; i < b.cols(); ++i) c[i] = e.reduced(i, b.cols());
  return c;
}

}  // namespace

std::vector<Monomial> monomial_order(int n, int r) {
  check_params(n, r);
  std::vector<Monomial> out;
  auto push = [&](int i, int j) {
    const Monomial m{i, j};
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (int a = 0; a < n - r; ++a) {
    for (int i = r; i >= 1; --i) push(i, a);
  }
  push(r, n - r);
  for (int j = 1; j <= n - r; ++j) push(0, j);
  for (int i = r - 1; i >= 1; --i) push(i, n - r);
  return out;
}

RatVector coefficient_vector(const BiPoly& p, const std::vector<Monomial>& order) {
  RatVector v(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) v[i] = p.coeff(order[i].x_exp, order[i].y_exp);
  return v;
}

RatMatrix coefficient_matrix(const std::vector<BitSeq>& seqs, int n, int r) {
  const std::vector<Monomial> order = monomial_order(n, r);
  std::vector<RatVector> cols;
  for (const auto& s : seqs) cols.push_back(coefficient_vector(tutte_freedom(s).poly, order));
  return RatMatrix::from_columns(cols, order.size());
}

std::vector<BitSeq> gamma_columns(int n, int r) {
  check_params(n, r);
  std::vector<BitSeq> out;
  for (int a = 0; a < n - r; ++a) {
    for (int b = r; b >= 1; --b) out.push_back(join_irreducible(a, b, n - r - a, r - b));
  }
  out.push_back(join_irreducible(n - r, r, 0, 0));
  return out;
}

LabeledMatrix gamma_matrix(int n, int r) {
  LabeledMatrix out;
  const std::vector<BitSeq> cols = gamma_columns(n, r);
  for (const auto& m : monomial_order(n, r)) out.row_labels.push_back(monomial_label(m));
  for (const auto& s : cols) out.col_labels.push_back(s.str());
  out.matrix = coefficient_matrix(cols, n, r);
  return out;
}

BlockCheck check_block_structure(int n, int r) {
  check_params(n, r);
  const RatMatrix g = gamma_matrix(n, r).matrix;
  const std::size_t size = static_cast<std::size_t>(r) * (n - r) + 1;
  auto fail = [](std::size_t i, std::size_t j, const std::string& why) {
    return BlockCheck{false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + why};
  };
  for (std::size_t i = 0; i + 1 < size; ++i) {
    const std::size_t blk = i / r;
    const std::size_t p = i % r;
    for (std::size_t j = 0; j < size; ++j) {
      const bool zero = g(i, j) == 0;
      if (j + 1 == size) {
        if (!zero) return fail(i, j, "should be zero: final column");
      } else if (j / r > blk) {
        if (!zero) return fail(i, j, "should be zero: above the block diagonal");
      } else if (j / r == blk) {
        const std::size_t q = j % r;
        if (p + q > static_cast<std::size_t>(r) - 1 && !zero) {
          return fail(i, j, "should be zero: below the anti-diagonal");
        }
        if (p + q == static_cast<std::size_t>(r) - 1 && zero) {
          return fail(i, j, "should be nonzero: anti-diagonal");
        }
      }
    }
  }
  for (std::size_t j = 0; j + 1 < size; ++j) {
    if (g(size - 1, j) != 0) return fail(size - 1, j, "should be zero: final row");
  }
  if (g(size - 1, size - 1) != 1) return fail(size - 1, size - 1, "should be 1");
  return {true, ""};
}

std::size_t tutte_space_dim(int n, int r) { return rank(coefficient_matrix(enumerate(n, r), n, r)); }

std::vector<BitSeq> basis_sequences(int n, int r, BasisKind kind) {
  return kind == BasisKind::Join ? gamma_columns(n, r) : enumerate_meet_irr(n, r);
}

Expression express_in_basis(const BiPoly& p, BasisKind kind, int n, int r) {
  const std::vector<BitSeq> seqs = basis_sequences(n, r, kind);
  const std::vector<Monomial> order = monomial_order(n, r);
  const RatMatrix b = coefficient_matrix(seqs, n, r);
  const RatVector rhs = coefficient_vector(p, order);
  std::optional<RatVector> c;
  if (kind == BasisKind::Join) c = solve_join_blocks(b, rhs, n, r);
  if (!c) c = solve_by_rows(b, rhs);
  std::map<BitSeq, Rat> coords;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if ((*c)[i] != 0) coords.emplace(seqs[i], (*c)[i]);
  }
  Expression out;
  out.residual = p - combination(coords);
  if (out.residual.is_zero()) out.coords = std::move(coords);
  return out;
}

std::map<BitSeq, Rat> straighten_matroid(const RankOracle& m) {
  Expression e = express_in_basis(tutte_oracle(m).poly, BasisKind::Meet, m.size(), m.rank());
  if (!e.in_span()) throw std::logic_error("Tutte polynomial outside the freedom span");
  return *e.coords;
}

BiPoly Relation::lhs() const {
  return Rat(tau) * (tutte_freedom(upper_top).poly - tutte_freedom(upper_bottom).poly);
}

BiPoly Relation::rhs() const { return L_comb(diamond.prefix, diamond.middle, diamond.suffix); }

RatVector Relation::vector() const {
  const std::vector<BitSeq> order = enumerate(n, r);
  RatVector v(order.size());
  auto at = [&](const BitSeq& s) -> Rat& {
    return v[static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), s) - order.begin())];
  };
  at(upper_top) += Rat(tau);
  at(upper_bottom) -= Rat(tau);
  at(diamond.top()) -= 1;
  at(diamond.right()) += 1;
  at(diamond.left()) += 1;
  at(diamond.bottom()) -= 1;
  return v;
}

std::vector<Relation> relation_generators(int n, int r) {
  std::vector<Relation> out;
  for (const auto& iv : height2_intervals(n, r)) {
    const int a = iv.middle.weight();
    const int b = iv.middle.zeros();
    Relation rel;
    rel.n = n;
    rel.r = r;
    rel.diamond = iv;
    rel.upper_top = iv.prefix + meet_irreducible(a + 2, b + 2, 0, 0) + iv.suffix;
    rel.upper_bottom = iv.prefix + meet_irreducible(a + 1, 1, 1, b + 1) + iv.suffix;
    rel.tau = fgt(iv.middle).tau;
    out.push_back(std::move(rel));
  }
  return out;
}

KernelReport kernel_check(int n, int r) {
  check_params(n, r);
  KernelReport rep;
  const std::vector<BitSeq> seqs = enumerate(n, r);
  rep.symbols = seqs.size();
  rep.expected = seqs.size() - static_cast<std::size_t>(r) * (n - r) - 1;

  std::vector<Monomial> grid;
  for (int j = 0; j <= n - r; ++j) {
    for (int i = r; i >= 0; --i) grid.push_back({i, j});
  }
  std::vector<RatVector> images;
  for (const auto& s : seqs) images.push_back(coefficient_vector(sp_symbol(s), grid));
  rep.kernel_dim = seqs.size() - column_rank(images, grid.size());

  std::vector<RatVector> szs;
  rep.sz_in_kernel = true;
  for (const auto& iv : height2_intervals(n, r)) {
    const GInv v = sz(iv);
    if (!sp(v).is_zero()) rep.sz_in_kernel = false;
    RatVector col(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) col[i] = v.coeff(seqs[i]);
    szs.push_back(std::move(col));
  }
  rep.sz_rank = column_rank(szs, seqs.size());
  return rep;
}

GirthSubspace girth_subspace(int n, int r, int k) {
  check_params(n, r);
  if (k < 1 || k > r) throw std::domain_error("girth_subspace needs 1 <= k <= r");
  GirthSubspace out;
  out.expected = static_cast<std::size_t>(n - r) * (r - k + 1) + 1;
  for (const auto& m : enumerate_meet_irr(n, r)) {
    bool leading = true;
    for (int i = 1; i < k; ++i) leading = leading && m.bit(i) == 1;
    if (leading) out.basis.push_back(m);
  }
  out.basis_rank = rank(coefficient_matrix(out.basis, n, r));
  std::vector<BitSeq> filtered;
  for (const auto& s : enumerate(n, r)) {
    const int gth = girth(FreedomMatroid(s));
    if (gth >= k) filtered.push_back(s);
  }
  out.filtered_rank = filtered.empty() ? 0 : rank(coefficient_matrix(filtered, n, r));
  return out;
}

}  // namespace gtutte

#include "gtutte/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "gtutte/brylawski.hpp"
#include "gtutte/corpus.hpp"
#include "gtutte/ginv.hpp"
#include "gtutte/linbases.hpp"
#include "gtutte/tutte.hpp"

#ifndef GTUTTE_DEFAULT_DATA_DIR
#define GTUTTE_DEFAULT_DATA_DIR "data"
#endif

namespace gtutte {

namespace {

// Counts cases of one property and remembers the first counterexample.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = describe();
  }
  void record(Report& rep, const std::string& name) const {
    std::string detail = std::to_string(cases_) + " cases";
    if (failures_ > 0) detail += ", " + std::to_string(failures_) + " failed; first: " + first_;
    rep.add(name, failures_ == 0 && cases_ > 0, detail);
  }

 private:
  long cases_ = 0;
  long failures_ = 0;
  std::string first_;
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

BiPoly freedom_combination(const Json& coeffs) {
  BiPoly out;
  for (const auto& [key, c] : coeffs.items()) out += rat_from_json(c) * tutte_freedom(BitSeq::parse(key)).poly;
  return out;
}

std::vector<BitSeq> all_sequences(int n) {
  std::vector<BitSeq> out;
  for (int r = 0; r <= n; ++r) {
    for (auto& s : enumerate(n, r)) out.push_back(s);
  }
  return out;
}

std::vector<BitSeq> all_words(int len) {
  std::vector<BitSeq> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BitSeq::from_value(v, len));
  return out;
}

BitSeq ones(int k) { return BitSeq::block(1, k); }
BitSeq zeros(int k) { return BitSeq::block(0, k); }

Report appendix53(const SuiteOptions& opts) {
  Report rep{"appendix53", {}};
  const Json golden = Json::parse(read_file(opts.data_dir + "/golden/appendix53.json"));
  for (const auto& [key, text] : golden.at("tutte").items()) {
    const BitSeq s = BitSeq::parse(key);
    const BiPoly expect = parse_bipoly(text.get<std::string>());
    const BiPoly got = tutte_freedom(s).poly;
    const bool ok = got == expect && tutte_oracle(FreedomMatroid(s)).poly == expect;
    rep.add("T(F(" + key + "))", ok, ok ? "" : "computed " + to_text(got));
  }
  const std::size_t dim = tutte_space_dim(5, 3);
  rep.add("dim T(5,3)", dim == golden.at("dimension").get<std::size_t>(), std::to_string(dim));
  int idx = 0;
  for (const auto& syz : golden.at("syzygies")) {
    const BiPoly value = freedom_combination(syz);
    rep.add("syzygy " + std::to_string(++idx), value.is_zero(), value.is_zero() ? "" : to_text(value));
  }
  for (const auto& ex : golden.at("meet_expressions")) {
    const std::string target = ex.at("target").get<std::string>();
    const BiPoly lhs = tutte_freedom(BitSeq::parse(target)).poly;
    const bool identity = lhs == freedom_combination(ex.at("combination"));
    const Expression e = express_in_basis(lhs, BasisKind::Meet, 5, 3);
    bool coords = e.in_span() && e.coords->size() == ex.at("combination").size();
    for (const auto& [key, c] : ex.at("combination").items()) {
      coords = coords && e.coords->count(BitSeq::parse(key)) && e.coords->at(BitSeq::parse(key)) == rat_from_json(c);
    }
    rep.add("meet expression of T(F(" + target + "))", identity && coords,
            identity ? (coords ? "" : "solver coordinates differ") : "identity fails");
  }
  return rep;
}

Report gmatrix42(const SuiteOptions& opts) {
  Report rep{"gmatrix42", {}};
  const Json golden = Json::parse(read_file(opts.data_dir + "/golden/gmatrix_4_2.json"));
  const GMatrix& gm = g_matrix(4, 2);
  std::vector<std::string> order;
  for (const auto& s : gm.order) order.push_back(s.str());
  rep.add("order", order == golden.at("order").get<std::vector<std::string>>());
  auto compare = [&](const RatMatrix& m, const Json& rows) {
    if (rows.size() != m.rows()) return std::string("row count");
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (rat_from_json(rows[i][j]) != m(i, j)) {
          return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + to_string(m(i, j));
        }
      }
    }
    return std::string();
  };
  const std::string fwd = compare(gm.forward, golden.at("matrix"));
  rep.add("g-matrix", fwd.empty(), fwd);
  const std::string inv = compare(gm.inverse, golden.at("inverse"));
  rep.add("inverse", inv.empty(), inv);
  return rep;
}

Report gamma53(const SuiteOptions& opts) {
  Report rep{"gamma53", {}};
  const LabeledMatrix golden = labeled_matrix_from_csv(read_file(opts.data_dir + "/golden/gamma_5_3.csv"));
  const LabeledMatrix g = gamma_matrix(5, 3);
  rep.add("row labels", g.row_labels == golden.row_labels);
  rep.add("column labels", g.col_labels == golden.col_labels);
  rep.add("entries", g.matrix == golden.matrix);
  const std::size_t rk = rank(g.matrix);
  rep.add("rank 7", rk == 7, std::to_string(rk));
  const BlockCheck blocks = check_block_structure(5, 3);
  rep.add("block structure", blocks.ok, blocks.detail);
  return rep;
}

Report dims(const SuiteOptions& opts) {
  Report rep{"dims", {}};
  const int max_n = pick(opts.max_n, 8);
  for (int n = 0; n <= max_n; ++n) {
    Tally t;
    for (int r = 0; r <= n; ++r) {
      const std::size_t d = tutte_space_dim(n, r);
      const std::size_t want = static_cast<std::size_t>(r) * (n - r) + 1;
      t.expect(d == want, [&] { return "(" + std::to_string(n) + "," + std::to_string(r) + ") dim " + std::to_string(d); });
    }
    t.record(rep, "dim T(" + std::to_string(n) + ",r) = r(n-r)+1");
  }
  return rep;
}

Report specialization(const SuiteOptions& opts) {
  Report rep{"specialization", {}};
  const int max_n = pick(opts.max_n, 7);
  Tally freedom;
  Tally sums;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : all_sequences(n)) {
      const FreedomMatroid m(s);
      const GInv g = g_invariant(m);
      freedom.expect(sp(g) == tutte_oracle(m).poly, [&] { return "F(" + s.str() + ")"; });
      Rat total = 0;
      for (const auto& [k, c] : g.coeffs) total += c;
      sums.expect(total == Rat(factorial(n)), [&] { return "F(" + s.str() + ")"; });
    }
  }
  freedom.record(rep, "Sp(G(F(s))) = T(F(s)), n <= " + std::to_string(max_n));
  Tally random;
  for (const auto& m : random_corpus(pick(opts.samples, 100), max_n, opts.seed)) {
    const GInv g = g_invariant(m);
    random.expect(sp(g) == tutte_oracle(m).poly, [&] { return to_json(m).dump(); });
    Rat total = 0;
    for (const auto& [k, c] : g.coeffs) total += c;
    sums.expect(total == Rat(factorial(m.size())), [&] { return to_json(m).dump(); });
  }
  random.record(rep, "Sp(G(M)) = T(M), random corpus");
  sums.record(rep, "coefficients of G(M) sum to n!");
  return rep;
}

Report kernel(const SuiteOptions& opts) {
  Report rep{"kernel", {}};
  const int max_n = pick(opts.max_n, 7);
  for (int n = 2; n <= max_n; ++n) {
    Tally t;
    for (int r = 1; r < n; ++r) {
      const KernelReport k = kernel_check(n, r);
      t.expect(k.ok(), [&] {
        return "(" + std::to_string(n) + "," + std::to_string(r) + ") ker " + std::to_string(k.kernel_dim) +
               " sz " + std::to_string(k.sz_rank) + " want " + std::to_string(k.expected);
      });
    }
    t.record(rep, "ker Sp = span sz(I), n = " + std::to_string(n));
  }
  return rep;
}

Report routes(const SuiteOptions& opts) {
  Report rep{"routes", {}};
  const int max_n = pick(opts.max_n, 12);
  const int oracle_n = std::min(max_n, 10);
  Tally oracle;
  Tally dc;
  for (int n = 0; n <= oracle_n; ++n) {
    for (const auto& s : all_sequences(n)) {
      const BiPoly t = tutte_freedom(s).poly;
      oracle.expect(t == tutte_oracle(FreedomMatroid(s)).poly, [&] { return s.str(); });
      for (int pos : descents(s)) {
        dc.expect(t == tutte_freedom(s.erase(pos)).poly + tutte_freedom(s.erase(pos - 1)).poly,
                  [&] { return s.str() + " at " + std::to_string(pos); });
      }
    }
  }
  oracle.record(rep, "descent tree = corank-nullity, n <= " + std::to_string(oracle_n));
  dc.record(rep, "deletion-contraction at descents, n <= " + std::to_string(oracle_n));

  Tally meet;
  Tally join;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& s : enumerate_meet_irr(n, r)) {
        if (r == 0) continue;
        const auto f = *classify_irreducible(s).meet_form;
        meet.expect(tutte_meet_irr(f[0], f[1], f[2], f[3]).poly == tutte_freedom(s).poly, [&] { return s.str(); });
      }
      for (const auto& s : enumerate_join_irr(n, r)) {
        const auto f = *classify_irreducible(s).join_form;
        join.expect(tutte_direct_sum_form(f[0], f[1], f[2], f[3]).poly == tutte_freedom(s).poly, [&] { return s.str(); });
      }
    }
  }
  meet.record(rep, "meet-irreducible closed form, n <= " + std::to_string(max_n));
  join.record(rep, "join-irreducible closed form, n <= " + std::to_string(max_n));

  Tally uniform;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      uniform.expect(tutte_uniform(r, n - r).poly == tutte_freedom(ones(r) + zeros(n - r)).poly,
                     [&] { return "U(" + std::to_string(r) + "," + std::to_string(n) + ")"; });
    }
  }
  uniform.record(rep, "uniform closed form, n <= " + std::to_string(max_n));

  Tally tele;
  for (int c = 1; c <= 8; ++c) {
    for (int d = 1; d <= 8; ++d) {
      const BiPoly lhs = tutte_uniform(c, d).poly - BiPoly::y() * tutte_uniform(c, d - 1).poly;
      tele.expect(lhs == BiPoly::curve() * t_circ(c, d), [&] { return std::to_string(c) + "," + std::to_string(d); });
    }
  }
  tele.record(rep, "T(U_{c,c+d}) - y T(U_{c,c+d-1}) = (x+y-xy) t_circ(c,d)");

  Tally rec;
  auto D = [](int a, int b, int c, int d) {
    return tutte_uniform(a + c, b + d).poly - tutte_meet_irr(a, b, c, d).poly;
  };
  for (int n = 1; n <= std::min(max_n, 10); ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        for (int c = 0; a + b + c <= n; ++c) {
          const int d = n - a - b - c;
          if (a + c == 0) continue;
          const std::string id = std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d);
          const BiPoly v = D(a, b, c, d);
          if (b == 0) rec.expect(v.is_zero(), [&] { return "boundary " + id; });
          if (a >= 1 && b >= 1 && a - 1 + c >= 1) {
            rec.expect(v == D(a - 1, b, c, d) + D(a, b - 1, c, d), [&] { return "recursion " + id; });
          }
          if (c >= 1) {
            BiPoly sum;
            for (int i = 0; i < b; ++i) sum += Rat(binomial(a - 1 + i, i)) * D(0, b - i, c, d);
            rec.expect(v == sum, [&] { return "closed sum " + id; });
          }
        }
      }
    }
  }
  rec.record(rep, "D-recursion and its closed sum");
  return rep;
}

Report relations(const SuiteOptions& opts) {
  Report rep{"relations", {}};
  const int max_n = pick(opts.max_n, 9);
  const BiPoly curve = BiPoly::curve();

  Tally paving;
  Tally mip;
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r < n; ++r) {
      const BitSeq s = ones(r - 1) + zeros(1) + ones(1) + zeros(n - r - 1);
      paving.expect(tutte_freedom(s).poly == tutte_uniform(r, n - r).poly - curve, [&] { return s.str(); });
      for (int b = 0; b <= n - r; ++b) {
        const BitSeq m = ones(r - 1) + zeros(b) + ones(1) + zeros(n - r - b);
        mip.expect(tutte_mi_paving(n, r, b) == tutte_freedom(m).poly, [&] { return m.str(); });
      }
    }
  }
  paving.record(rep, "T(F(1^(r-1) 0 1 0^(n-r-1))) = T(U_{r,n}) - (x+y-xy)");
  mip.record(rep, "single-copoint paving formula");

  Tally nodescent;
  Tally linterval;
  for (int n = 4; n <= max_n; ++n) {
    const int rest = n - 4;
    for (int l1 = 0; l1 <= rest; ++l1) {
      for (int l2 = 0; l1 + l2 <= rest; ++l2) {
        const int l3 = rest - l1 - l2;
        for (const auto& r1 : all_words(l1)) {
          for (const auto& r2 : all_words(l2)) {
            for (const auto& r3 : all_words(l3)) {
              const BiPoly l = L_comb(r1, r2, r3);
              const FGT f1 = fgt(r1);
              const FGT f2 = fgt(r2);
              const FGT f3 = fgt(r3);
              linterval.expect(l == Rat(f2.tau) * f1.f * f3.g * curve,
                               [&] { return r1.str() + "|" + r2.str() + "|" + r3.str(); });
              if (descents(r1).empty() && descents(r2).empty() && descents(r3).empty()) {
                nodescent.expect(l == BiPoly::monomial(r3.weight(), r1.zeros()) * curve,
                                 [&] { return r1.str() + "|" + r2.str() + "|" + r3.str(); });
              }
            }
          }
        }
      }
    }
  }
  nodescent.record(rep, "L(0^a1^b || 0^c1^d || 0^e1^f) = x^f y^a (x+y-xy), n <= " + std::to_string(max_n));
  linterval.record(rep, "L(r1||r2||r3) = f(r1) tau(r2) g(r3) (x+y-xy), n <= " + std::to_string(max_n));

  Tally tp1;
  for (int n = 2; n <= max_n; ++n) {
    for (int l1 = 0; l1 + 2 <= n; ++l1) {
      for (int l3 = 0; l1 + l3 + 2 <= n; ++l3) {
        const int ab = n - l1 - l3;
        for (int a = 1; a < ab; ++a) {
          const int b = ab - a;
          for (const auto& r1 : all_words(l1)) {
            for (const auto& r3 : all_words(l3)) {
              const BitSeq hi = r1 + ones(a) + zeros(b) + r3;
              const BitSeq lo = r1 + ones(a - 1) + zeros(1) + ones(1) + zeros(b - 1) + r3;
              const BiPoly want = fgt(r1).f * fgt(r3).g * curve;
              tp1.expect(tutte_freedom(hi).poly - tutte_freedom(lo).poly == want,
                         [&] { return hi.str() + " vs " + lo.str(); });
            }
          }
        }
      }
    }
  }
  tp1.record(rep, "T(r1 1^a 0^b r3) - T(r1 1^(a-1) 0 1 0^(b-1) r3) = f(r1) g(r3) (x+y-xy)");

  const int span_n = std::min(max_n, 7);
  Tally holds;
  Tally span;
  for (int n = 2; n <= span_n; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto rels = relation_generators(n, r);
      const RatMatrix coeffs = coefficient_matrix(enumerate(n, r), n, r);
      std::vector<RatVector> vecs;
      for (const auto& rel : rels) {
        const bool tau_ok = Rat(rel.tau) == tutte_freedom(rel.diamond.middle).poly.eval(1, 1);
        holds.expect(tau_ok && rel.lhs() == rel.rhs() && is_zero(coeffs * rel.vector()),
                     [&] { return rel.upper_top.str() + " / " + rel.diamond.top().str(); });
        vecs.push_back(rel.vector());
      }
      const std::size_t total = enumerate(n, r).size();
      const std::size_t want = total - static_cast<std::size_t>(r) * (n - r) - 1;
      const std::size_t got = vecs.empty() ? 0 : rank(RatMatrix::from_columns(vecs, total));
      span.expect(got == want, [&] {
        return "(" + std::to_string(n) + "," + std::to_string(r) + ") rank " + std::to_string(got) + " want " + std::to_string(want);
      });
    }
  }
  holds.record(rep, "every generating relation holds, n <= " + std::to_string(span_n));
  span.record(rep, "relations span C(n,r) - r(n-r) - 1 dimensions, n <= " + std::to_string(span_n));
  return rep;
}

Report brylawski_suite(const SuiteOptions& opts) {
  Report rep{"brylawski", {}};
  const int max_n = pick(opts.max_n, 8);
  auto sat_zero = [](const BiPoly& t, int n, int r) {
    if (!fits(t, n, r)) return false;
    const auto vals = verify_sat(CoeffGrid::from_poly(t, n, r));
    return std::all_of(vals.begin(), vals.end(), [](const SatValue& v) { return v.value == 0; });
  };
  Tally freedom;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : all_sequences(n)) {
      freedom.expect(sat_zero(tutte_freedom(s).poly, n, s.weight()), [&] { return s.str(); });
    }
  }
  freedom.record(rep, "J_m = 0 for freedom matroids, n <= " + std::to_string(max_n));
  Tally random;
  for (const auto& m : random_corpus(pick(opts.samples, 100), std::min(max_n, 7), opts.seed)) {
    random.expect(sat_zero(tutte_oracle(m).poly, m.size(), m.rank()), [&] { return to_json(m).dump(); });
  }
  random.record(rep, "J_m = 0 on the random corpus");
  Tally space;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      const RelationSpaceReport rs = relation_nullspace_check(n, r);
      space.expect(rs.ok(), [&] {
        return "(" + std::to_string(n) + "," + std::to_string(r) + ") dim " + std::to_string(rs.relation_dim) +
               " J-rank " + std::to_string(rs.generator_rank);
      });
    }
  }
  space.record(rep, "relation space has dimension n, spanned by J_0..J_{n-1}");
  Tally hooks;
  Tally centered;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& s : enumerate_join_irr(n, r)) {
        const auto [a, b, c, d] = *classify_irreducible(s).join_form;
        const CoeffGrid g = CoeffGrid::from_poly(tutte_freedom(s).poly, n, r);
        const CoeffGrid u = CoeffGrid::from_poly(tutte_uniform(b, c).poly, b + c, b);
        for (int m = d + a; m < n; ++m) {
          const Rat sgn = a % 2 == 0 ? Rat(1) : Rat(-1);
          hooks.expect(J(m, g) == sgn * hook(m, d, a, g), [&] { return s.str() + " m=" + std::to_string(m); });
          const Rat h = centered_hook(m, d, a, u);
          centered.expect(h == 0 && h == hook(m, d, a, u.shifted(d, a)),
                          [&] { return s.str() + " m=" + std::to_string(m); });
        }
      }
    }
  }
  hooks.record(rep, "J_m = (-1)^a H_m(d,a) on join-irreducibles");
  centered.record(rep, "centered hooks vanish on uniform matroids");
  return rep;
}

Report curve_suite(const SuiteOptions& opts) {
  Report rep{"curve", {}};
  const int max_n = pick(opts.max_n, 7);
  const int pairs = pick(opts.samples, 500);
  std::vector<BasisListMatroid> pool = random_corpus(std::max(pairs / 2, 60), max_n, opts.seed);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : all_sequences(n)) pool.push_back(BasisListMatroid::from_oracle(FreedomMatroid(s)));
  }
  std::map<std::pair<int, int>, std::vector<BiPoly>> by_shape;
  Tally at22;
  for (const auto& m : pool) {
    const BiPoly t = tutte_oracle(m).poly;
    at22.expect(t.eval(2, 2) == Rat(Int(1) << m.size()), [&] { return to_json(m).dump(); });
    by_shape[{m.size(), m.rank()}].push_back(t);
  }
  at22.record(rep, "T(M; 2, 2) = 2^n");
  std::vector<const std::vector<BiPoly>*> shapes;
  for (const auto& [k, v] : by_shape) {
    if (v.size() >= 2) shapes.push_back(&v);
  }
  Rng rng(opts.seed ^ 0x5eedULL);
  Tally divide;
  for (int i = 0; i < pairs; ++i) {
    const auto& group = *shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> pick_one(0, group.size() - 1);
    const BiPoly diff = group[pick_one(rng)] - group[pick_one(rng)];
    const auto q = divide_by_curve(diff);
    divide.expect(q.has_value() && *q * BiPoly::curve() == diff, [&] { return to_text(diff); });
  }
  divide.record(rep, "x+y-xy divides T(M) - T(N), " + std::to_string(pairs) + " pairs");
  return rep;
}

Report relaxation(const SuiteOptions& opts) {
  Report rep{"relaxation", {}};
  const int max_n = pick(opts.max_n, 7);
  Tally tutte;
  Tally ginv;
  for (const auto& p : relaxation_pairs(pick(opts.samples, 20), max_n, opts.seed)) {
    const int n = p.before.size();
    const int r = p.before.rank();
    tutte.expect(tutte_oracle(p.after).poly - tutte_oracle(p.before).poly == BiPoly::curve(),
                 [&] { return to_json(p.before).dump(); });
    GInv want(n, r);
    const Rat scale(factorial(r) * factorial(n - r));
    want.add(ones(r) + zeros(n - r), scale);
    want.add(ones(r - 1) + zeros(1) + ones(1) + zeros(n - r - 1), -scale);
    const GInv diff = g_invariant(p.after) - g_invariant(p.before);
    ginv.expect(diff == want && sp(diff) == BiPoly::curve(), [&] { return to_json(p.before).dump(); });
  }
  tutte.record(rep, "T(M') - T(M) = x+y-xy");
  ginv.record(rep, "G(M') - G(M) = r!(n-r)!([1^r 0^(n-r)] - [1^(r-1) 0 1 0^(n-r-1)])");
  return rep;
}

Report girth_suite(const SuiteOptions& opts) {
  Report rep{"girth", {}};
  const int max_n = pick(opts.max_n, 7);
  Tally dims;
  Tally rels;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int k = 1; k <= r; ++k) {
        const std::string id = "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
        const GirthSubspace g = girth_subspace(n, r, k);
        dims.expect(g.ok(), [&] {
          return id + " basis " + std::to_string(g.basis.size()) + " filtered rank " + std::to_string(g.filtered_rank);
        });
        const RelationSpaceReport rs = girth_relation_check(n, r, k);
        rels.expect(rs.ok(), [&] { return id; });
      }
    }
  }
  dims.record(rep, "dim T_k(n,r) = (n-r)(r-k+1)+1");
  rels.record(rep, "J relations plus vanishing t_ij span the girth-k relations");
  Tally support;
  std::vector<BasisListMatroid> pool = random_corpus(pick(opts.samples, 100), max_n, opts.seed);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : all_sequences(n)) pool.push_back(BasisListMatroid::from_oracle(FreedomMatroid(s)));
  }
  for (const auto& m : pool) {
    const int gth = girth(m);
    const CoeffGrid grid = CoeffGrid::from_poly(tutte_oracle(m).poly, m.size(), m.rank());
    const int top = gth == kInfiniteGirth ? m.size() + 1 : gth;
    for (int k = 1; k <= top; ++k) {
      support.expect(girth_support_check(grid, k), [&] { return to_json(m).dump() + " k=" + std::to_string(k); });
    }
  }
  support.record(rep, "support of T(M) for girth >= k");
  return rep;
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"appendix53", appendix53}, {"gmatrix42", gmatrix42},       {"gamma53", gamma53},
      {"dims", dims},             {"specialization", specialization}, {"kernel", kernel},
      {"routes", routes},         {"relations", relations},       {"brylawski", brylawski_suite},
      {"curve", curve_suite},     {"relaxation", relaxation},     {"girth", girth_suite},
  };
  return suites;
}

}  // namespace

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string default_data_dir() {
  if (const char* env = std::getenv("GTUTTE_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return GTUTTE_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteOptions resolved = opts;
  if (resolved.data_dir.empty()) resolved.data_dir = default_data_dir();
  if (name == "all") {
    Report all{"all", {}};
    for (const auto& [suite, fn] : registry()) {
      for (auto& c : fn(resolved).checks) all.add(suite + ": " + c.name, c.pass, c.detail);
    }
    return all;
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(resolved);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"schema_version", 1}, {"suite", report.suite}, {"ok", report.ok()}, {"checks", checks}};
}

}  // namespace gtutte

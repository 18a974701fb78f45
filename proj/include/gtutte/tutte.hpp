#pragma once

// Tutte polynomials: the corank-nullity oracle, descent-tree recursion for
// freedom matroids, and closed forms for uniform, join-irreducible,
// meet-irreducible and paving cases.

#include <map>
#include <string>

#include "gtutte/bipoly.hpp"
#include "gtutte/matroid.hpp"
#include "gtutte/seqlat.hpp"

namespace gtutte {

enum class Route { Oracle, Uniform, DirectSum, DescentTree, MeetIrreducible, Paving };

std::string route_name(Route route);

struct TuttePoly {
  BiPoly poly;
  Route route = Route::Oracle;
};

/// sum over A of (x-1)^(r - rk A) (y-1)^(|A| - rk A)
TuttePoly tutte_oracle(const RankOracle& m);

/// T(U_{b,b+c}); the empty matroid (b = c = 0) gives 1.
TuttePoly tutte_uniform(int b, int c);

/// T(F(0^a 1^b 0^c 1^d)) = y^a T(U_{b,b+c}) x^d
TuttePoly tutte_direct_sum_form(int a, int b, int c, int d);

/// Sum of x^wt y^zeros over the descent-tree leaves of s. Memoized in a
/// process-wide cache that is safe to share between threads.
TuttePoly tutte_freedom(const BitSeq& s);

/// T(U_{c,c+d}; x, 0) / x = sum_{k<c} C(d-1+k, k) x^(c-1-k). Zero for c = 0;
/// throws std::domain_error for d < 1.
BiPoly t_circ(int c, int d);

/// T(F(1^a 0^b 1^c 0^d)) with r = a + c, n = a + b + c + d:
///   T(U_{r,n}) - (x+y-xy) sum_{k<b} (sum_{i<=k} C(a-1+i, i) y^(k-i)) t_circ(c, b-k+d)
TuttePoly tutte_meet_irr(int a, int b, int c, int d);

/// T(F(1^(r-1) 0^b 1 0^(n-r-b))) = T(U_{r,n}) - (x+y-xy) sum_{j<b} C(r-1+j, j) y^(b-1-j)
BiPoly tutte_mi_paving(int n, int r, int b);

/// T(P) for a paving (n,r)-matroid with f[s] copoints of size s.
TuttePoly paving_tutte(int n, int r, const std::map<int, long>& f);

struct FGT {
  BiPoly f;  // T(F(u); 1, y)
  BiPoly g;  // T(F(u); x, 1)
  Int tau;   // T(F(u); 1, 1), the number of bases
};

FGT fgt(const BitSeq& u);

/// T(r1 10 r2 10 r3) - T(r1 10 r2 01 r3) - T(r1 01 r2 10 r3) + T(r1 01 r2 01 r3)
BiPoly L_comb(const BitSeq& r1, const BitSeq& r2, const BitSeq& r3);

/// Substitutes x = 1 (keeping y) or y = 1 (keeping x).
BiPoly at_x_one(const BiPoly& p);
BiPoly at_y_one(const BiPoly& p);

}  // namespace gtutte

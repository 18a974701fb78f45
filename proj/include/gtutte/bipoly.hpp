#pragma once

// Sparse bivariate polynomials in x, y over the rationals.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtutte/rational.hpp"

namespace gtutte {

/// x^x_exp y^y_exp. Ordered by ascending y-exponent, then descending
/// x-exponent, which is also the display order of polynomials.
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y_exp <=> b.y_exp; c != 0) return c;
    return b.x_exp <=> a.x_exp;
  }
};

/// Label used in matrix exports, e.g. "x^2*y^1".
std::string monomial_label(const Monomial& m);

class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rat>;

  BiPoly() = default;
  explicit BiPoly(const Rat& constant);

  static BiPoly monomial(int x_exp, int y_exp, const Rat& coeff = 1);
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  /// x + y - xy
  static BiPoly curve();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rat coeff(int x_exp, int y_exp) const;
  int degree_x() const;
  int degree_y() const;
  /// True when every coefficient is an integer.
  bool is_integral() const;
  Rat eval(const Rat& x, const Rat& y) const;

  void add_term(const Monomial& m, const Rat& c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const Rat& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rat& c, BiPoly p) { return p *= c; }
  friend BiPoly operator-(BiPoly p) { return p *= Rat(-1); }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TermMap terms_;
};

BiPoly pow(const BiPoly& base, int exponent);

/// (x-1)^a (y-1)^b
BiPoly shifted_monomial(int a, int b);

/// Quotient q with q * (x + y - xy) = p, or nullopt when no polynomial
/// quotient exists.
std::optional<BiPoly> divide_by_curve(const BiPoly& p);

/// Terms by ascending y-exponent then descending x-exponent, e.g.
/// "x^3 + 2x^2 + 2x + xy + 2y + y^2". Non-integral coefficients print in
/// parentheses: "(1/2)x".
std::string to_text(const BiPoly& p);

/// Inverse of to_text; also accepts "*" between factors, factors in any
/// order ("y^2 x^3"), bare rationals "3/2x" and arbitrary whitespace.
/// Throws std::invalid_argument on malformed text.
BiPoly parse_bipoly(std::string_view text);

}  // namespace gtutte

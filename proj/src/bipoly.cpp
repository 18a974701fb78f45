#include "gtutte/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gtutte {

namespace {

using UniPoly = std::vector<Rat>;  // ascending powers of x

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  BiPoly parse() {
    if (src_.empty()) fail("empty polynomial");
    BiPoly out;
    bool first = true;
    while (pos_ < src_.size()) {
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (src_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += sign * term();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + src_ + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  Rat rational_literal() {
    std::string text;
    if (peek() == '-' || peek() == '+') text.push_back(src_[pos_++]);
    text += digits();
    if (peek() == '/') {
      ++pos_;
      text += "/" + digits();
    }
    return parse_rat(text);
  }

  BiPoly term() {
    Rat coeff = 1;
    bool has_coeff = false;
    if (peek() == '(') {
      ++pos_;
      coeff = rational_literal();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      has_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational_literal();
      has_coeff = true;
    }
    int xe = 0;
    int ye = 0;
    bool has_factor = false;
    while (true) {
      if (peek() == '*' && (has_coeff || has_factor)) {
        ++pos_;
        if (peek() != 'x' && peek() != 'y') fail("expected variable after '*'");
      }
      if (peek() != 'x' && peek() != 'y') break;
      const char var = src_[pos_++];
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = std::stoi(digits());
      }
      (var == 'x' ? xe : ye) += e;
      has_factor = true;
    }
    if (!has_coeff && !has_factor) fail("expected a term");
    return BiPoly::monomial(xe, ye, coeff);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string monomial_label(const Monomial& m) {
  return "x^" + std::to_string(m.x_exp) + "*y^" + std::to_string(m.y_exp);
}

BiPoly::BiPoly(const Rat& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::monomial(int x_exp, int y_exp, const Rat& coeff) {
  if (x_exp < 0 || y_exp < 0) throw std::domain_error("negative exponent");
  BiPoly p;
  p.add_term({x_exp, y_exp}, coeff);
  return p;
}

BiPoly BiPoly::curve() { return x() + y() - monomial(1, 1); }

Rat BiPoly::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_exp);
  return d;
}

int BiPoly::degree_y() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y_exp);
  return d;
}

bool BiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

Rat BiPoly::eval(const Rat& xv, const Rat& yv) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < m.x_exp; ++i) term *= xv;
    for (int j = 0; j < m.y_exp; ++j) term *= yv;
    total += term;
  }
  return total;
}

void BiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, ca * cb);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BiPoly pow(const BiPoly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power");
  BiPoly out(Rat(1));
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BiPoly shifted_monomial(int a, int b) {
  BiPoly out;
  for (int i = 0; i <= a; ++i) {
    const Int ci = binomial(a, i) * (((a - i) % 2 == 0) ? 1 : -1);
    for (int j = 0; j <= b; ++j) {
      const Int cj = binomial(b, j) * (((b - j) % 2 == 0) ? 1 : -1);
      out.add_term({i, j}, Rat(ci * cj));
    }
  }
  return out;
}

std::optional<BiPoly> divide_by_curve(const BiPoly& p) {
  if (p.is_zero()) return BiPoly{};
  // Write p = sum_j c_j(x) y^j and divide by (1-x) y + x in Q(x)[y]. The
  // quotient is unique, so it is polynomial iff every (1-x)-division is exact.
  const int dy = p.degree_y();
  std::vector<UniPoly> work(static_cast<std::size_t>(dy) + 1);
  for (const auto& [m, c] : p.terms()) {
    auto& row = work[static_cast<std::size_t>(m.y_exp)];
    if (row.size() <= static_cast<std::size_t>(m.x_exp)) row.resize(m.x_exp + 1);
    row[m.x_exp] = c;
  }
  BiPoly quotient;
  for (int j = dy; j >= 1; --j) {
    UniPoly w = work[j];
    trim(w);
    if (w.empty()) continue;
    // h = w / (1 - x) = -(w / (x - 1)); synthetic division at x = 1.
    const std::size_t d = w.size() - 1;
    UniPoly h(d, 0);
    Rat carry = 0;
    for (std::size_t k = d; k >= 1; --k) {
      carry += w[k];
      h[k - 1] = carry;
    }
    if (carry + w[0] != 0) return std::nullopt;  // w(1) != 0
    for (auto& c : h) c = -c;
    // work_{j-1} -= x * h
    auto& below = work[static_cast<std::size_t>(j - 1)];
    if (below.size() < h.size() + 1) below.resize(h.size() + 1);
    for (std::size_t k = 0; k < h.size(); ++k) {
      below[k + 1] -= h[k];
      quotient.add_term({static_cast<int>(k), j - 1}, h[k]);
    }
  }
  UniPoly rest = work[0];
  trim(rest);
  if (!rest.empty()) return std::nullopt;
  return quotient;
}

std::string to_text(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rat mag = negative ? Rat(-c) : c;
    const bool constant = m.x_exp == 0 && m.y_exp == 0;
    if (constant) {
      out += to_string(mag);
      continue;
    }
    if (!is_integer(mag)) {
      out += "(" + to_string(mag) + ")";
    } else if (mag != 1) {
      out += to_string(mag);
    }
    if (m.x_exp > 0) out += m.x_exp == 1 ? "x" : "x^" + std::to_string(m.x_exp);
    if (m.y_exp > 0) out += m.y_exp == 1 ? "y" : "y^" + std::to_string(m.y_exp);
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace gtutte

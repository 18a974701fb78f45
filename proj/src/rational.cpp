#include "gtutte/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gtutte {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rat q(negative ? Int(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int binomial(long n, long k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace gtutte

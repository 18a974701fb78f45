#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtutte {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p", "+p" or "p/q" (whitespace not allowed). The result is
/// canonical. Throws std::invalid_argument on malformed text or a zero
/// denominator.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

bool is_integer(const Rat& q);

Int factorial(int n);

/// Binomial coefficient with C(n,0) = 1 for every n and 0 whenever k < 0 or
/// k > n. Negative n with k > 0 gives 0.
Int binomial(long n, long k);

}  // namespace gtutte

#pragma once

#include <gmpxx.h>

#include <set>
#include <string>

namespace meadow {

// Exact arithmetic for the whole toolkit; GMP keeps numerals and
// polynomial coefficients exact at any size.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational num/den; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

bool is_prime(const Int& n);

/// Distinct prime factors of |n|; n must be nonzero. prime_factors(1) = {}.
std::set<Int> prime_factors(Int n);

/// Parses "n" or "n/m" with an optional sign.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const Int& n);

}  // namespace meadow

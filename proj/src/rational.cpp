#include "meadow/rational.hpp"

#include "meadow/errors.hpp"

namespace meadow {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::set<Int> prime_factors(Int n) {
  if (n == 0) throw DomainError("prime factors of zero");
  if (n < 0) n = -n;
  std::set<Int> out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.insert(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    }
  }
  if (n > 1) out.insert(n);
  return out;
}

Rat parse_rational(const std::string& text) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw DomainError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace meadow

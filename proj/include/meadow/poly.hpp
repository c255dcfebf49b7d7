#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Monomial: variable -> positive exponent (absent means exponent 0).
using Monomial = std::map<std::string, unsigned>;

/// Graded lexicographic order: total degree first, then variable by
/// variable along the global (lexicographic-by-name) variable order,
/// larger exponent on an earlier variable winning.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals. Stored coefficients
/// are never zero; the zero polynomial has an empty term map.
class Poly {
 public:
  Poly() = default;  // zero

  static Poly constant(const Rat& c);
  static Poly variable(const std::string& name);
  static Poly monomial(const Monomial& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rat constant_value() const;  // requires is_constant()

  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;
  std::set<std::string> variables() const;
  const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;  // grlex-greatest; nonzero only
  const Rat& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly&);
  Poly& operator-=(const Poly&);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly&, const Poly&);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly scaled(const Rat& c) const;
  Poly pow(unsigned e) const;
  Poly derivative(const std::string& var) const;
  Rat evaluate(const std::map<std::string, Rat>& point) const;

  bool operator==(const Poly&) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, Rat, GrlexLess> terms_;
  void add_term(const Monomial&, const Rat&);
};

/// Decomposition of a nonzero polynomial as sign * content * primitive:
/// positive rational content, integer primitive part with coefficient
/// gcd 1 and positive leading coefficient.
struct ContentSplit {
  Rat content;
  int sign = 1;
  Poly primitive;
};

/// Translation of a bot- and division-free term into its coefficient
/// map. Closed constant subterms may use division (fraction numerals);
/// any other division, and any bot, is rejected.
Poly term_to_poly(const Term&);

/// Inverse translation: the canonical polynomial sumterm, monomials in
/// descending graded-lex order with numeral coefficients.
/// term_to_poly(poly_to_sumterm(p)) == p.
Term poly_to_sumterm(const Poly&);

ContentSplit content_primitive(const Poly&);  // throws on zero

/// Greatest common divisor over Q[X], normalized primitive with positive
/// leading coefficient (primitive pseudo-remainder sequences, recursing
/// on the last variable). Throws when both inputs are zero.
Poly gcd(const Poly&, const Poly&);

/// Product of the distinct irreducible factors: the input divided by
/// gcd(p, dp/dx1, ..., dp/dxn), normalized primitive positive.
Poly squarefree_part(const Poly&);

/// True iff the two nonzero polynomials vanish on exactly the same
/// points of the algebraic closure; decided as equality of squarefree
/// parts.
bool same_zero_set(const Poly&, const Poly&);

/// Exact division attempt; disengaged when the divisor does not divide.
std::optional<Poly> try_divide(const Poly& numerator, const Poly& divisor);

}  // namespace meadow

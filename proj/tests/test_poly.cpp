#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "meadow/poly.hpp"
#include "meadow/rng.hpp"

using namespace meadow;

namespace {

Poly X() { return Poly::variable("x"); }
Poly Y() { return Poly::variable("y"); }
Poly C(long n) { return Poly::constant(Rat(n)); }
Poly C(long n, long d) { return Poly::constant(make_rat(n, d)); }

// --- test-only gcd oracle: brute-force divisor enumeration -----------------
//
// Enumerates integer polynomials with small coefficients over a fixed
// monomial support, keeps those dividing both inputs, and returns a
// maximal-degree one (normalized). Independent of the PRS code path.

void candidates_over(const std::vector<Monomial>& support, int bound, std::size_t i, Poly acc,
                     std::vector<Poly>& out) {
  if (i == support.size()) {
    if (!acc.is_zero()) out.push_back(std::move(acc));
    return;
  }
  for (int c = -bound; c <= bound; ++c)
    candidates_over(support, bound, i + 1, acc + Poly::monomial(support[i], Rat(c)), out);
}

Poly oracle_common_divisor(const Poly& a, const Poly& b, const std::vector<Monomial>& support,
                           int bound) {
  std::vector<Poly> cands;
  candidates_over(support, bound, 0, Poly(), cands);
  Poly best = C(1);
  for (const Poly& d : cands) {
    if (!try_divide(a, d) || !try_divide(b, d)) continue;
    if (d.total_degree() > best.total_degree()) best = content_primitive(d).primitive;
  }
  return best;
}

std::vector<Monomial> univar_support(unsigned max_deg) {
  std::vector<Monomial> out;
  out.push_back({});
  for (unsigned e = 1; e <= max_deg; ++e) out.push_back({{"x", e}});
  return out;
}

// random integer polynomial, possibly zero
Poly random_poly(Rng& rng, int vars, unsigned max_deg, int terms, long coeff_bound) {
  static const char* names[] = {"x", "y", "z"};
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int v = 0; v < vars; ++v) {
      unsigned e = static_cast<unsigned>(rng.below(max_deg + 1));
      if (e > 0) m[names[v]] = e;
    }
    p += Poly::monomial(m, Rat(rng.range(-coeff_bound, coeff_bound)));
  }
  return p;
}

Poly random_nonzero(Rng& rng, int vars, unsigned max_deg, int terms, long coeff_bound) {
  for (;;) {
    Poly p = random_poly(rng, vars, max_deg, terms, coeff_bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("term_to_poly translates ring terms") {
  CHECK(term_to_poly(parse("(x+1)*(x-1)")) == X() * X() - C(1));
  CHECK(term_to_poly(parse("0")).is_zero());
  CHECK(term_to_poly(parse("2*x + 3*y")) == C(2) * X() + C(3) * Y());
  // fraction numerals are fine; anything else with division is not
  CHECK(term_to_poly(parse("1/2 * x")) == C(1, 2) * X());
  CHECK_THROWS_AS(term_to_poly(parse("bot")), DomainError);
  CHECK_THROWS_AS(term_to_poly(parse("x/y")), DomainError);
  CHECK_THROWS_AS(term_to_poly(parse("x/0")), DomainError);
  CHECK_THROWS_AS(term_to_poly(parse("1/0")), DomainError);
}

TEST_CASE("poly_to_sumterm emits canonical sumterms") {
  CHECK(print(poly_to_sumterm(X() * X() - C(1))) == "x * x + (-1)");
  CHECK(poly_to_sumterm(Poly()) == Term::zero());
  CHECK(poly_to_sumterm(C(3)) == parse("3"));
  CHECK(print(poly_to_sumterm(C(3) * X() * Y() + C(-2) * X())) == "3 * x * y + -2 * x");
}

TEST_CASE("poly round-trip: term_to_poly after poly_to_sumterm is the identity") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    Poly p = random_poly(rng, 3, 3, 4, 9);
    if (i % 3 == 0) p = p.scaled(make_rat(1, rng.range(1, 7)));  // rational coefficients too
    CHECK(term_to_poly(poly_to_sumterm(p)) == p);
  }
}

TEST_CASE("content and primitive part") {
  {
    auto s = content_primitive(C(4) * X() + C(6) * Y());
    CHECK(s.content == 2);
    CHECK(s.sign == 1);
    CHECK(s.primitive == C(2) * X() + C(3) * Y());
  }
  {
    auto s = content_primitive(-X());
    CHECK(s.content == 1);
    CHECK(s.sign == -1);
    CHECK(s.primitive == X());
  }
  {
    // hand oracle: multiplying by 2 clears the denominators and gives x + 3
    Poly p = C(1, 2) * X() + C(3, 2);
    CHECK(p.scaled(Rat(2)) == X() + C(3));
    auto s = content_primitive(p);
    CHECK(s.content == make_rat(1, 2));
    CHECK(s.sign == 1);
    CHECK(s.primitive == X() + C(3));
    CHECK(s.primitive.scaled(s.content * s.sign) == p);
  }
  CHECK_THROWS_AS(content_primitive(Poly()), DomainError);
}

TEST_CASE("gcd agrees with the brute-force divisor oracle") {
  {
    // x^2 - 1 = (x-1)(x+1), x^2 - 2x + 1 = (x-1)^2
    Poly a = X() * X() - C(1);
    Poly b = X() * X() - C(2) * X() + C(1);
    Poly expected = oracle_common_divisor(a, b, univar_support(1), 2);
    CHECK(expected == X() - C(1));
    CHECK(gcd(a, b) == expected);
  }
  {
    // no nonconstant common divisor of x*y and x+y up to degree 1
    Poly a = X() * Y(), b = X() + Y();
    std::vector<Monomial> support = {{}, {{"x", 1}}, {{"y", 1}}};
    Poly expected = oracle_common_divisor(a, b, support, 2);
    CHECK(expected == C(1));
    CHECK(gcd(a, b) == C(1));
  }
  CHECK(gcd(C(4) * X() + C(6), Poly()) == C(2) * X() + C(3));
  CHECK(gcd(Poly(), -X()) == X());
  CHECK_THROWS_AS(gcd(Poly(), Poly()), DomainError);
}

TEST_CASE("gcd on random univariate products matches the oracle") {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    Poly f = random_nonzero(rng, 1, 1, 2, 2);  // linear-ish factors
    Poly a = f * random_nonzero(rng, 1, 1, 2, 2);
    Poly b = f * random_nonzero(rng, 1, 1, 2, 2);
    Poly g = gcd(a, b);
    // the oracle's best divisor has the same degree, and both divide
    Poly o = oracle_common_divisor(a, b, univar_support(2), 2);
    CHECK(g.total_degree() >= o.total_degree());
    CHECK(try_divide(a, g).has_value());
    CHECK(try_divide(b, g).has_value());
  }
}

TEST_CASE("gcd contract: gcd(a*h, b*h) == gcd(a, b)*h up to normalization") {
  Rng rng(43);
  for (int i = 0; i < 250; ++i) {
    Poly a = random_nonzero(rng, 3, 2, 3, 5);
    Poly b = random_nonzero(rng, 3, 2, 3, 5);
    Poly h = random_nonzero(rng, 3, 2, 2, 5);
    Poly lhs = gcd(a * h, b * h);
    Poly rhs = content_primitive(gcd(a, b) * h).primitive;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("squarefree parts") {
  CHECK(squarefree_part(X() * X() * Y()) == X() * Y());
  {
    // (x + y)^2 expands to the input, so its squarefree part is x + y
    Poly p = X() * X() + C(2) * X() * Y() + Y() * Y();
    CHECK((X() + Y()) * (X() + Y()) == p);
    CHECK(squarefree_part(p) == X() + Y());
  }
  CHECK(squarefree_part(X() + C(1)) == X() + C(1));
  CHECK(squarefree_part(C(12)) == C(1));
  CHECK_THROWS_AS(squarefree_part(Poly()), DomainError);

  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_nonzero(rng, 2, 2, 3, 4);
    CHECK(squarefree_part(a * a) == squarefree_part(a));
  }
}

TEST_CASE("same_zero_set") {
  CHECK(same_zero_set(X() * X(), X()));
  CHECK(same_zero_set(C(2) * X() + C(2) * Y(), X() + Y()));
  {
    Poly a = X() * Y(), b = X() + Y();
    // the point (1, -1) separates them
    std::map<std::string, Rat> pt{{"x", Rat(1)}, {"y", Rat(-1)}};
    CHECK(a.evaluate(pt) != 0);
    CHECK(b.evaluate(pt) == 0);
    CHECK(!same_zero_set(a, b));
  }
  CHECK_THROWS_AS(same_zero_set(Poly(), X()), DomainError);

  // equivalence relation on sampled polynomials
  Rng rng(53);
  std::vector<Poly> sample;
  for (int i = 0; i < 20; ++i) {
    Poly s = random_nonzero(rng, 2, 2, 2, 3);
    sample.push_back(s);
    sample.push_back(s * s);                                   // related by construction
    sample.push_back(s.scaled(Rat(rng.range(1, 5))));          // and by scaling
  }
  for (const Poly& a : sample) CHECK(same_zero_set(a, a));
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      CHECK(same_zero_set(sample[i], sample[j]) == same_zero_set(sample[j], sample[i]));
  for (std::size_t i = 0; i < sample.size(); i += 5)
    for (std::size_t j = 0; j < sample.size(); j += 5)
      for (std::size_t k = 0; k < sample.size(); k += 5)
        if (same_zero_set(sample[i], sample[j]) && same_zero_set(sample[j], sample[k]))
          CHECK(same_zero_set(sample[i], sample[k]));
}

TEST_CASE("exact division") {
  Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_nonzero(rng, 2, 2, 3, 5);
    Poly b = random_nonzero(rng, 2, 2, 3, 5);
    auto q = try_divide(a * b, a);
    REQUIRE(q.has_value());
    CHECK(*q == b);
  }
  CHECK(!try_divide(X() + C(1), X()).has_value());
  CHECK_THROWS_AS(try_divide(X(), Poly()), DomainError);
}

TEST_CASE("sumterm/polynomial correspondences") {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_nonzero(rng, 2, 3, 3, 6);
    Term ta = poly_to_sumterm(a);

    // degree read off the sumterm syntax equals the polynomial degree
    unsigned syntactic_deg = 0;
    std::function<unsigned(const Term&)> deg = [&](const Term& t) -> unsigned {
      switch (t.kind()) {
        case Kind::Var: return 1;
        case Kind::Mul: return deg(t.child(0)) + deg(t.child(1));
        case Kind::Add: return std::max(deg(t.child(0)), deg(t.child(1)));
        case Kind::Neg: return deg(t.child(0));
        case Kind::Div: return deg(t.child(0));  // fraction numerals only
        default: return 0;
      }
    };
    syntactic_deg = deg(ta);
    CHECK(syntactic_deg == a.total_degree());

    // primitivity read off the sumterm's numeral coefficients
    Int coeff_gcd = 0;
    std::function<void(const Term&)> walk = [&](const Term& t) {
      if (t.kind() == Kind::Add) {
        walk(t.child(0));
        walk(t.child(1));
        return;
      }
      Int c = 1;
      Term cur = t;
      if (cur.kind() == Kind::Neg && !numeral_value(cur)) cur = cur.child(0);
      while (cur.kind() == Kind::Mul && !numeral_value(cur)) cur = cur.child(0);
      if (auto n = numeral_value(cur)) c = *n;
      coeff_gcd = gcd(coeff_gcd, c);
    };
    walk(ta);
    coeff_gcd = abs(coeff_gcd);
    CHECK((coeff_gcd == 1) == (content_primitive(a).content == 1));

    // divisibility transported through the translation
    Poly b = random_nonzero(rng, 2, 2, 2, 4);
    Poly prod = term_to_poly(Term::mul(ta, poly_to_sumterm(b)));
    CHECK(prod == a * b);
    CHECK(try_divide(prod, a).has_value());
  }
}

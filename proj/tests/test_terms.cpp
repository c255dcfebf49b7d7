#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "meadow/harness.hpp"
#include "meadow/rng.hpp"
#include "meadow/semantics.hpp"
#include "meadow/term.hpp"

using namespace meadow;

TEST_CASE("parse builds the expected ASTs") {
  CHECK(parse("x + (-x)") == Term::add(Term::var("x"), Term::neg(Term::var("x"))));
  CHECK(parse("1/0") == Term::div(Term::one(), Term::zero()));
  CHECK(parse("bot * 0") == Term::mul(Term::bot(), Term::zero()));

  // subtraction sugar and precedence
  CHECK(parse("a - b") == Term::add(Term::var("a"), Term::neg(Term::var("b"))));
  CHECK(parse("-x*y") == Term::mul(Term::neg(Term::var("x")), Term::var("y")));
  CHECK(parse("a/b*c") == Term::mul(Term::div(Term::var("a"), Term::var("b")), Term::var("c")));
  CHECK(parse("a + b + c") ==
        Term::add(Term::add(Term::var("a"), Term::var("b")), Term::var("c")));
  CHECK(parse("2") == Term::add(Term::one(), Term::one()));
  CHECK(parse("  ( x ) ") == Term::var("x"));
}

TEST_CASE("print emits the canonical concrete syntax") {
  CHECK(print(Term::add(Term::var("x"), Term::neg(Term::var("x")))) == "x + (-x)");
  CHECK(print(Term::div(Term::one(), Term::zero())) == "1/0");
  CHECK(print(Term::mul(Term::bot(), Term::zero())) == "bot * 0");
  CHECK(print(parse("x + (y + z)")) == "x + (y + z)");
  CHECK(print(parse("x/(y/z)")) == "x/(y/z)");
  CHECK(print(parse("-(x*y)")) == "-(x * y)");
  CHECK(print(parse("5")) == "5");
  CHECK(print(parse("-5 * x")) == "-5 * x");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("x +"), ParseError);
  CHECK_THROWS_AS(parse("x ? y"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x y"), ParseError);
  try {
    parse("x ? y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("numeral_of produces canonical numerals") {
  CHECK(numeral_of(Rat(2)) == Term::add(Term::one(), Term::one()));
  CHECK(numeral_of(Rat(0)) == Term::zero());
  CHECK(numeral_of(Rat(1)) == Term::one());
  CHECK(numeral_of(Rat(-1)) == Term::neg(Term::one()));

  Term five = parse("5"), three = parse("3");
  CHECK(numeral_of(make_rat(-5, 3)) == Term::neg(Term::div(five, three)));
  // lowest terms
  CHECK(numeral_of(make_rat(2, 4)) == Term::div(Term::one(), Term::add(Term::one(), Term::one())));

  CHECK(numeral_value(parse("7")) == Int(7));
  CHECK(numeral_value(parse("-7")) == Int(-7));
  CHECK(numeral_value(parse("0")) == Int(0));
  CHECK(!numeral_value(parse("x + 1")).has_value());
  CHECK(!numeral_value(parse("1 + (1 + 1)")).has_value());
}

TEST_CASE("free_vars") {
  CHECK(free_vars(parse("x + 0*y")) == std::set<std::string>{"x", "y"});
  CHECK(free_vars(parse("1/0")).empty());
  CHECK(free_vars(parse("x/(x*x)")) == std::set<std::string>{"x"});
}

TEST_CASE("round-trip: parse(print(t)) == t on random terms") {
  GenConfig cfg;
  cfg.max_depth = 6;
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Term t = gen_term(rng, cfg);
    CHECK(parse(print(t)) == t);
  }
}

TEST_CASE("numeral denotation: eval(numeral_of(q)) == q over the rationals") {
  Rng rng(11);
  CarrierSpec q = CarrierSpec::rationals();
  for (int i = 0; i < 1000; ++i) {
    Rat r = make_rat(Int(rng.range(-999, 999)), Int(rng.range(1, 99)));
    MeadowValue v = eval(numeral_of(r), {}, q);
    REQUIRE(!v.is_bot());
    CHECK(v.value() == r);
  }
}

TEST_CASE("purity is monotone along the signature inclusions") {
  GenConfig cfg;
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    Term t = gen_term(rng, cfg);
    if (conforms(t, SignatureTag::Ring)) {
      CHECK(conforms(t, SignatureTag::RingBot));
      CHECK(conforms(t, SignatureTag::Meadow));
    }
    if (conforms(t, SignatureTag::RingBot)) CHECK(conforms(t, SignatureTag::CommonMeadow));
    CHECK(conforms(t, SignatureTag::CommonMeadow));
  }
}

TEST_CASE("equation files: one per line, comments, blank lines") {
  std::istringstream in("# header\n x + y = y + x \n\n1/0 = bot # trailing\n");
  auto eqs = parse_equation_file(in);
  REQUIRE(eqs.size() == 2);
  CHECK(eqs[0].lhs == parse("x + y"));
  CHECK(eqs[1].rhs == Term::bot());

  std::istringstream bad("x + = y\n");
  CHECK_THROWS_AS(parse_equation_file(bad), ParseError);
}

TEST_CASE("substitution and subterm addressing") {
  Term t = parse("x + y*x");
  Term s = substitute(t, {{"x", parse("1/z")}});
  CHECK(s == parse("1/z + y*(1/z)"));

  CHECK(subterm_at(t, {1, 0}) == Term::var("y"));
  CHECK(replace_at(t, {1, 0}, Term::zero()) == parse("x + 0*x"));
  CHECK(replace_at(t, {}, Term::one()) == Term::one());
}

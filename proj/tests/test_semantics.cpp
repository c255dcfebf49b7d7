#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "meadow/harness.hpp"
#include "meadow/poly.hpp"
#include "meadow/rng.hpp"
#include "meadow/semantics.hpp"

using namespace meadow;

namespace {

const CarrierSpec kQ = CarrierSpec::rationals();

// All valuations over the plain prime-field elements (no bot).
bool valid_without_bot(const Equation& e, long p) {
  const auto fv = free_vars(e);
  std::vector<std::string> vars(fv.begin(), fv.end());
  CarrierSpec c = CarrierSpec::prime_field(p);
  std::vector<long> odo(vars.size(), 0);
  for (;;) {
    Valuation val;
    for (std::size_t i = 0; i < vars.size(); ++i)
      val.emplace(vars[i], MeadowValue::elem(Rat(odo[i])));
    if (eval(e.lhs, val, c) != eval(e.rhs, val, c)) return false;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++odo[i] < p) break;
      odo[i] = 0;
      if (i == 0) return true;
    }
    if (vars.empty()) return true;
  }
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(eval(parse("1/0"), {}, kQ).is_bot());
  CHECK(eval(parse("x - x"), {{"x", MeadowValue::bot()}}, kQ).is_bot());
  CHECK(eval(parse("2/4"), {}, CarrierSpec::prime_field(2)).is_bot());

  CHECK(eval(parse("2/4"), {}, kQ).value() == make_rat(1, 2));
  CHECK(eval(parse("1/2"), {}, CarrierSpec::prime_field(3)).value() == 2);
  CHECK(eval(parse("x*0"), {{"x", MeadowValue::bot()}}, kQ).is_bot());
  CHECK(eval(parse("x - x"), {{"x", MeadowValue::elem(Rat(5))}}, kQ).value() == 0);

  CHECK_THROWS_AS(eval(parse("x"), {}, kQ), DomainError);
  CHECK_THROWS_AS(CarrierSpec::prime_field(6), DomainError);
}

TEST_CASE("bot absorbs through every operation (depth <= 2 sweep)") {
  // leaves and all operator combinations over them, evaluated at every
  // x in {0, 1, 2, bot}: whenever a child evaluates to bot, so does the
  // parent.
  std::vector<Term> depth1 = {Term::zero(), Term::one(), Term::bot(), Term::var("x")};
  std::vector<Term> depth2 = depth1;
  for (const Term& a : depth1) {
    depth2.push_back(Term::neg(a));
    for (const Term& b : depth1) {
      depth2.push_back(Term::add(a, b));
      depth2.push_back(Term::mul(a, b));
      depth2.push_back(Term::div(a, b));
    }
  }
  std::vector<MeadowValue> xs = {MeadowValue::elem(Rat(0)), MeadowValue::elem(Rat(1)),
                                 MeadowValue::elem(Rat(2)), MeadowValue::bot()};
  for (const CarrierSpec& c : {kQ, CarrierSpec::prime_field(3)}) {
    for (const Term& t : depth2) {
      if (t.arity() == 0) continue;
      for (const MeadowValue& x : xs) {
        Valuation val{{"x", x}};
        bool child_bot = false;
        for (int i = 0; i < t.arity(); ++i) child_bot = child_bot || eval(t.child(i), val, c).is_bot();
        if (child_bot) CHECK(eval(t, val, c).is_bot());
      }
    }
  }
}

TEST_CASE("exhaustive_check finds bot-driven counterexamples") {
  auto cv = exhaustive_check(parse_equation("x*0 = 0"), CarrierSpec::prime_field(2));
  REQUIRE(cv.has_value());
  CHECK(cv->at("x").is_bot());

  CHECK(!exhaustive_check(parse_equation("x + 0 = x"), CarrierSpec::prime_field(3)).has_value());
  CHECK(!exhaustive_check(parse_equation("0*(x+y) = 0*(x*y)"), CarrierSpec::prime_field(2))
             .has_value());

  CHECK_THROWS_AS(exhaustive_check(parse_equation("x + y = y + x"), kQ), DomainError);
  CHECK_THROWS_AS(
      exhaustive_check(parse_equation("x + y + z = z + y + x"), CarrierSpec::prime_field(2), 2),
      DomainError);
}

TEST_CASE("sample_check: deterministic pre-pass and seeded draws") {
  CHECK(!sample_check(parse_equation("x + y = y + x"), kQ, 1000, 42).has_value());

  auto cv = sample_check(parse_equation("x - x = 0"), kQ, 1000, 42);
  REQUIRE(cv.has_value());
  CHECK(cv->at("x").is_bot());  // found by the pre-pass, not by luck

  // closed equation, found in the empty valuation
  auto closed = sample_check(parse_equation("1/2 = 3/6"), CarrierSpec::prime_field(3), 1, 0);
  REQUIRE(closed.has_value());
  CHECK(closed->empty());
  // hand evaluation: in F_3 the left side is 2 and the right side is bot
  CHECK(eval(parse("1/2"), {}, CarrierSpec::prime_field(3)).value() == 2);
  CHECK(eval(parse("3/6"), {}, CarrierSpec::prime_field(3)).is_bot());

  // determinism
  GenConfig cfg;
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Equation e = gen_equation(rng, cfg);
    CHECK(sample_check(e, kQ, 100, 9) == sample_check(e, kQ, 100, 9));
  }
}

TEST_CASE("balanced ring equations transfer to the bot enlargement and back") {
  GenConfig cfg;
  cfg.signature = SignatureTag::Ring;
  cfg.max_depth = 4;
  cfg.max_vars = 2;
  Rng rng(17);
  int balanced_seen = 0;
  for (int i = 0; i < 4000 && balanced_seen < 300; ++i) {
    Equation e = gen_equation(rng, cfg);
    if (free_vars(e.lhs) != free_vars(e.rhs)) continue;
    ++balanced_seen;
    for (long p : {2L, 3L}) {
      bool pure = valid_without_bot(e, p);
      bool enl = !exhaustive_check(e, CarrierSpec::prime_field(p)).has_value();
      CHECK(pure == enl);
    }
  }
  CHECK(balanced_seen >= 300);

  // The balance hypothesis matters: x - x = 0 holds in every field but
  // fails in the enlargement at x = bot.
  Equation unbalanced = parse_equation("x - x = 0");
  CHECK(valid_without_bot(unbalanced, 3));
  CHECK(exhaustive_check(unbalanced, CarrierSpec::prime_field(3)).has_value());
}

TEST_CASE("closed ring terms evaluate to the constant of their polynomial") {
  GenConfig cfg;
  cfg.signature = SignatureTag::Ring;
  cfg.max_vars = 0;
  cfg.max_depth = 5;
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    Term t = gen_term(rng, cfg);
    MeadowValue v = eval(t, {}, kQ);
    REQUIRE(!v.is_bot());
    CHECK(v.value() == term_to_poly(t).constant_value());
  }
}

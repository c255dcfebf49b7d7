#include "meadow/normalize.hpp"

namespace meadow {

QuasiPoly QuasiPoly::bot() {
  QuasiPoly q;
  q.bottom = true;
  return q;
}

QuasiPoly QuasiPoly::of(Poly p, std::set<std::string> annex) {
  QuasiPoly q;
  q.poly = std::move(p);
  for (const auto& v : q.poly.variables()) annex.erase(v);
  q.annex = std::move(annex);
  return q;
}

namespace {

// Intermediate accumulator; all_vars tracks every variable seen below,
// so variables cancelled out of the polynomial still absorb bot.
struct Acc {
  bool bottom = false;
  Poly poly;
  std::set<std::string> all_vars;
};

Acc reduce(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero: return {};
    case Kind::One: return {false, Poly::constant(Rat(1)), {}};
    case Kind::Bot: return {true, {}, {}};
    case Kind::Var: return {false, Poly::variable(t.var_name()), {t.var_name()}};
    case Kind::Neg: {
      Acc a = reduce(t.child(0));
      if (!a.bottom) a.poly = -a.poly;
      return a;
    }
    case Kind::Add:
    case Kind::Mul: {
      Acc a = reduce(t.child(0));
      Acc b = reduce(t.child(1));
      if (a.bottom || b.bottom) return {true, {}, {}};
      Acc out;
      out.poly = t.kind() == Kind::Add ? a.poly + b.poly : a.poly * b.poly;
      out.all_vars = std::move(a.all_vars);
      out.all_vars.merge(b.all_vars);
      return out;
    }
    case Kind::Div: throw DomainError("term contains division; reduce_wcr needs a division-free term");
  }
  throw DomainError("unreachable term kind");
}

}  // namespace

QuasiPoly reduce_wcr(const Term& t) {
  Acc a = reduce(t);
  if (a.bottom) return QuasiPoly::bot();
  return QuasiPoly::of(std::move(a.poly), std::move(a.all_vars));
}

bool wcr_equal(const Term& lhs, const Term& rhs) {
  return reduce_wcr(lhs) == reduce_wcr(rhs);
}

Term quasipoly_to_term(const QuasiPoly& q) {
  if (q.bottom) return Term::bot();
  Term sum = poly_to_sumterm(q.poly);
  if (q.annex.empty()) return sum;
  std::optional<Term> prod;
  for (const auto& v : q.annex) {
    Term var = Term::var(v);
    prod = prod ? Term::mul(std::move(*prod), std::move(var)) : std::move(var);
  }
  Term tail = Term::mul(Term::zero(), std::move(*prod));
  if (q.poly.is_zero()) return tail;
  return Term::add(std::move(sum), std::move(tail));
}

}  // namespace meadow

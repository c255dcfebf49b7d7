#include "meadow/flatten.hpp"

namespace meadow {

namespace {

Path extend(const Path& p, int i) {
  Path out = p;
  out.push_back(i);
  return out;
}

// Flattening walks the term bottom-up, applying division axioms at
// recorded positions of the evolving whole term. Each case strictly
// reduces the number of divisions below the node, which is the
// termination measure.
struct Flattener {
  Term cur;
  RewriteTrace trace;

  const Rule wrap = axiom_rule(12);       // x -> x/1
  const Rule bot_frac = axiom_rule(18);   // bot -> 1/0
  const Rule neg_num = axiom_rule(13);    // -(x/y) -> (-x)/y
  const Rule mul_frac = axiom_rule(14);   // (x/y)*(u/v) -> (x*u)/(y*v)
  const Rule add_frac = axiom_rule(15);   // x/y + u/v -> ((x*v)+(y*u))/(y*v)
  const Rule div_frac = axiom_rule(16);   // x/(u/v) -> x*((v*v)/(u*v))

  void apply(const Rule& r, const Path& at) {
    Term sub = subterm_at(cur, at);
    auto s = match(r.lhs, sub);
    if (!s) throw Error("internal: flatten step failed to match");
    cur = replace_at(cur, at, instantiate(r.rhs, *s));
    trace.push_back(RewriteStep{r, at, std::move(*s)});
  }

  // Makes the subterm at `path` a flat fracterm.
  void flat(const Path& path) {
    Term t = subterm_at(cur, path);
    if (is_ring_term(t)) {
      apply(wrap, path);
      return;
    }
    switch (t.kind()) {
      case Kind::Bot:
        apply(bot_frac, path);
        return;
      case Kind::Neg:
        flat(extend(path, 0));
        apply(neg_num, path);
        return;
      case Kind::Add:
        flat(extend(path, 0));
        flat(extend(path, 1));
        apply(add_frac, path);
        return;
      case Kind::Mul:
        flat(extend(path, 0));
        flat(extend(path, 1));
        apply(mul_frac, path);
        return;
      case Kind::Div: {
        const bool num_pure = is_ring_term(t.child(0));
        const bool den_pure = is_ring_term(t.child(1));
        if (!num_pure) flat(extend(path, 0));
        if (!den_pure) flat(extend(path, 1));
        if (num_pure && den_pure) return;  // already flat
        if (num_pure) {
          apply(div_frac, path);            // a/(u/v) -> a*((v*v)/(u*v))
          apply(wrap, extend(path, 0));     // a -> a/1
          apply(mul_frac, path);
        } else {
          if (den_pure) apply(wrap, extend(path, 1));  // b -> b/1
          apply(div_frac, path);
          apply(mul_frac, path);
        }
        return;
      }
      default:
        throw Error("internal: flatten reached an unexpected node");
    }
  }
};

}  // namespace

std::pair<FlatFracterm, RewriteTrace> flatten(const Term& t) {
  Flattener f{t, {}};
  f.flat({});
  if (f.cur.kind() != Kind::Div || !is_ring_term(f.cur.child(0)) || !is_ring_term(f.cur.child(1)))
    throw Error("internal: flatten did not produce a flat fracterm");
  return {FlatFracterm{f.cur.child(0), f.cur.child(1)}, std::move(f.trace)};
}

FlatFracterm denominator_annex_shift(const FlatFracterm& f) {
  QuasiPoly qd = reduce_wcr(f.den);
  if (qd.bottom) throw DomainError("denominator reduces to bot; the fracterm is identically bot");
  if (qd.annex.empty()) return f;
  std::optional<Term> prod;
  for (const auto& v : qd.annex) {
    Term var = Term::var(v);
    prod = prod ? Term::mul(std::move(*prod), std::move(var)) : std::move(var);
  }
  Term num = Term::add(f.num, Term::mul(Term::zero(), std::move(*prod)));
  return FlatFracterm{std::move(num), poly_to_sumterm(qd.poly)};
}

}  // namespace meadow

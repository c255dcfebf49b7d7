#include "meadow/decide.hpp"

#include <algorithm>

namespace meadow {

std::set<std::string> CanonicalFracterm::total_vars() const {
  std::set<std::string> out = annex;
  for (const auto& v : num.variables()) out.insert(v);
  for (const auto& v : den.variables()) out.insert(v);
  return out;
}

CanonicalFracterm canonicalize(const Term& t) {
  auto [frac, trace] = flatten(t);
  QuasiPoly qn = reduce_wcr(frac.num);
  QuasiPoly qd = reduce_wcr(frac.den);
  // flat components are ring terms, so neither reduction can be bottom
  CanonicalFracterm c;
  if (qd.poly.is_zero()) {
    c.bottom = true;
    return c;
  }
  c.num = std::move(qn.poly);
  c.den = std::move(qd.poly);
  c.annex = std::move(qn.annex);
  c.annex.merge(qd.annex);
  for (const auto& v : c.num.variables()) c.annex.erase(v);
  for (const auto& v : c.den.variables()) c.annex.erase(v);
  return c;
}

std::string to_string(FailedCondition f) {
  switch (f) {
    case FailedCondition::BothNotBottom: return "both-not-bottom";
    case FailedCondition::VariableSets: return "variable-sets";
    case FailedCondition::ContentPrimeSupport: return "content-prime-support";
    case FailedCondition::DenominatorZeroSet: return "denominator-zero-set";
    case FailedCondition::CrossMultiplication: return "cross-multiplication";
  }
  return "?";
}

namespace {

std::set<Int> prime_support(const Rat& content) {
  std::set<Int> out;
  if (content.get_num() != 1) out.merge(prime_factors(content.get_num()));
  if (content.get_den() != 1) out.merge(prime_factors(content.get_den()));
  return out;
}

std::string join_vars(const std::set<std::string>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += ", ";
    out += v;
  }
  return out;
}

std::string join_primes(const std::set<Int>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ", ";
    out += to_string(p);
  }
  return out;
}

}  // namespace

Verdict decide(const Equation& e) { return decide(e, SearchBudget{}); }

Verdict decide(const Equation& e, const SearchBudget& budget, bool search) {
  CanonicalFracterm l = canonicalize(e.lhs);
  CanonicalFracterm r = canonicalize(e.rhs);
  Verdict v;

  auto invalid = [&](FailedCondition f) {
    v.valid = false;
    v.failed = f;
    if (search) v.countermodel = find_countermodel(e, budget);
    return v;
  };

  if (l.bottom && r.bottom) {
    v.valid = true;
    v.reasons = {"both sides reduce to bot"};
    return v;
  }
  if (l.bottom != r.bottom) return invalid(FailedCondition::BothNotBottom);
  v.reasons.push_back("neither side reduces to bot");

  auto vl = l.total_vars(), vr = r.total_vars();
  if (vl != vr) return invalid(FailedCondition::VariableSets);
  v.reasons.push_back("variable sets agree: {" + join_vars(vl) + "}");

  ContentSplit cl = content_primitive(l.den), cr = content_primitive(r.den);
  auto sl = prime_support(cl.content), sr = prime_support(cr.content);
  if (sl != sr) return invalid(FailedCondition::ContentPrimeSupport);
  v.reasons.push_back("denominator contents share prime support {" + join_primes(sl) + "}");

  if (!same_zero_set(cl.primitive, cr.primitive)) return invalid(FailedCondition::DenominatorZeroSet);
  v.reasons.push_back("denominator zero sets agree (squarefree part " +
                      squarefree_part(l.den).to_string() + ")");

  if (!(l.num * r.den == r.num * l.den)) return invalid(FailedCondition::CrossMultiplication);
  v.reasons.push_back("cross-multiplication identity holds");

  v.valid = true;
  return v;
}

std::optional<Countermodel> find_countermodel(const Equation& e, const SearchBudget& budget) {
  const auto fv = free_vars(e);
  const std::vector<std::string> vars(fv.begin(), fv.end());
  const std::size_t k = vars.size();

  auto differs = [&](const CarrierSpec& c, const Valuation& val) {
    return eval(e.lhs, val, c) != eval(e.rhs, val, c);
  };

  // Stage 1: bot patterns (none, singles, pairs) over the rationals,
  // remaining variables set to a common small constant.
  const CarrierSpec q = CarrierSpec::rationals();
  std::vector<std::vector<std::size_t>> patterns;
  patterns.push_back({});
  for (std::size_t i = 0; i < k; ++i) patterns.push_back({i});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) patterns.push_back({i, j});
  const Rat fills[] = {Rat(1), Rat(0), Rat(2), Rat(-1)};
  for (const auto& pattern : patterns) {
    const std::size_t n_fills = pattern.size() == k && k > 0 ? 1 : std::size(fills);
    for (std::size_t fi = 0; fi < n_fills; ++fi) {
      Valuation val;
      for (const auto& v : vars) val.emplace(v, MeadowValue::elem(fills[fi]));
      for (std::size_t i : pattern) val.at(vars[i]) = MeadowValue::bot();
      if (differs(q, val)) return Countermodel{q, val};
    }
  }

  // Stage 2: exhaustive valuations over the budget's prime fields.
  if (static_cast<int>(k) <= budget.max_vars) {
    for (long p : budget.primes) {
      CarrierSpec c = CarrierSpec::prime_field(p);
      if (auto val = exhaustive_check(e, c, budget.max_vars)) return Countermodel{c, *val};
    }
  }

  // Stage 3: seeded rational sampling.
  if (auto val = sample_check(e, q, budget.samples, budget.seed)) return Countermodel{q, *val};
  return std::nullopt;
}

std::string format_verdict(const Verdict& v) {
  std::string out = "verdict=";
  out += v.valid ? "valid" : "invalid";
  out += '\n';
  out += "condition=" + (v.failed ? to_string(*v.failed) : std::string("none")) + '\n';
  if (v.countermodel) {
    out += "countermodel.carrier=" + v.countermodel->carrier.to_string() + '\n';
    for (const auto& [var, val] : v.countermodel->valuation)
      out += "countermodel." + var + "=" + val.to_string() + '\n';
  }
  return out;
}

}  // namespace meadow

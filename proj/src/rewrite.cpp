#include "meadow/rewrite.hpp"

namespace meadow {

namespace {

bool match_into(const Term& pattern, const Term& subject, Subst& s) {
  if (pattern.kind() == Kind::Var) {
    auto [it, inserted] = s.emplace(pattern.var_name(), subject);
    return inserted || it->second == subject;
  }
  if (pattern.kind() != subject.kind()) return false;
  for (int i = 0; i < pattern.arity(); ++i)
    if (!match_into(pattern.child(i), subject.child(i), s)) return false;
  return true;
}

}  // namespace

std::optional<Subst> match(const Term& pattern, const Term& subject) {
  Subst s;
  if (!match_into(pattern, subject, s)) return std::nullopt;
  return s;
}

Term instantiate(const Term& pattern, const Subst& s) {
  if (pattern.kind() == Kind::Var) {
    auto it = s.find(pattern.var_name());
    if (it == s.end()) throw DomainError("unbound pattern variable '" + pattern.var_name() + "'");
    return it->second;
  }
  switch (pattern.kind()) {
    case Kind::Add: return Term::add(instantiate(pattern.child(0), s), instantiate(pattern.child(1), s));
    case Kind::Mul: return Term::mul(instantiate(pattern.child(0), s), instantiate(pattern.child(1), s));
    case Kind::Div: return Term::div(instantiate(pattern.child(0), s), instantiate(pattern.child(1), s));
    case Kind::Neg: return Term::neg(instantiate(pattern.child(0), s));
    default: return pattern;
  }
}

const std::vector<Equation>& axiom_table() {
  static const std::vector<Equation> table = {
      parse_equation("(x + y) + z = x + (y + z)"),
      parse_equation("x + y = y + x"),
      parse_equation("x + 0 = x"),
      parse_equation("x + (-x) = 0*x"),
      parse_equation("x*(y*z) = (x*y)*z"),
      parse_equation("x*y = y*x"),
      parse_equation("1*x = x"),
      parse_equation("x*(y + z) = x*y + x*z"),
      parse_equation("-(-x) = x"),
      parse_equation("0*(x + y) = 0*(x*y)"),
      parse_equation("x + bot = bot"),
      parse_equation("x = x/1"),
      parse_equation("-(x/y) = (-x)/y"),
      parse_equation("(x/y)*(u/v) = (x*u)/(y*v)"),
      parse_equation("x/y + u/v = (x*v + y*u)/(y*v)"),
      parse_equation("x/(u/v) = x*((v*v)/(u*v))"),
      parse_equation("x/(y + 0*z) = (x + 0*z)/y"),
      parse_equation("bot = 1/0"),
  };
  return table;
}

Rule axiom_rule(int number, bool reversed) {
  const auto& table = axiom_table();
  if (number < 1 || number > static_cast<int>(table.size()))
    throw DomainError("no axiom numbered " + std::to_string(number));
  const Equation& e = table[number - 1];
  Rule r;
  r.axiom = number;
  r.name = "axiom " + std::to_string(number);
  r.lhs = reversed ? e.rhs : e.lhs;
  r.rhs = reversed ? e.lhs : e.rhs;
  return r;
}

namespace {
Rule derived(std::string name, const std::string& lhs, const std::string& rhs, int axiom = 0) {
  return Rule{axiom, std::move(name), parse(lhs), parse(rhs)};
}
}  // namespace

AxiomSet annex_rules() {
  return {
      Rule{3, "add-zero", parse("x + 0"), parse("x")},
      derived("split-zero-product", "0*(x*y)", "0*x + 0*y"),
      derived("split-zero-sum", "0*(x + y)", "0*x + 0*y", 8),
      derived("drop-zero-one", "0*1", "0"),
      derived("drop-zero-zero", "0*0", "0"),
      derived("collapse-duplicate", "0*x + 0*x", "0*x"),
  };
}

Rule annex_merge_rule() { return derived("merge-annex", "0*x + 0*y", "0*(x*y)"); }

namespace {

std::optional<RewriteStep> find_redex(const Term& t, const AxiomSet& rules, Path& path) {
  for (const Rule& r : rules)
    if (auto s = match(r.lhs, t)) return RewriteStep{r, path, std::move(*s)};
  for (int i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    if (auto hit = find_redex(t.child(i), rules, path)) return hit;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::pair<Term, RewriteTrace> apply_trace(const Term& start, const AxiomSet& rules,
                                          std::size_t max_steps) {
  Term cur = start;
  RewriteTrace trace;
  while (trace.size() < max_steps) {
    Path path;
    auto hit = find_redex(cur, rules, path);
    if (!hit) break;
    cur = replace_at(cur, hit->pos, instantiate(hit->rule.rhs, hit->subst));
    trace.push_back(std::move(*hit));
  }
  return {cur, trace};
}

Term replay(const Term& start, const RewriteTrace& trace) {
  Term cur = start;
  for (const RewriteStep& st : trace) {
    if (subterm_at(cur, st.pos) != instantiate(st.rule.lhs, st.subst))
      throw DomainError("trace step '" + st.rule.name + "' does not match the current term");
    cur = replace_at(cur, st.pos, instantiate(st.rule.rhs, st.subst));
  }
  return cur;
}

}  // namespace meadow

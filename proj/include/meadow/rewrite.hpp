#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meadow/term.hpp"

namespace meadow {

/// An oriented rewrite rule. Pattern variables are the Var leaves of
/// lhs. `axiom` is the table number (1..18) the rule instantiates, 0 for
/// derived helper rules.
struct Rule {
  int axiom = 0;
  std::string name;
  Term lhs, rhs;
};

/// A rule set; associativity and commutativity are not built in — terms
/// are matched syntactically.
using AxiomSet = std::vector<Rule>;

using Subst = std::map<std::string, Term>;

struct RewriteStep {
  Rule rule;
  Path pos;
  Subst subst;
};
using RewriteTrace = std::vector<RewriteStep>;

/// First-order matching of pattern against subject (consistent bindings
/// for repeated pattern variables).
std::optional<Subst> match(const Term& pattern, const Term& subject);
Term instantiate(const Term& pattern, const Subst&);

/// The 18 equational axioms: weak commutative rings with bot (1..11)
/// followed by the division axioms (12..18). Index i holds axiom i+1.
const std::vector<Equation>& axiom_table();

/// An axiom as an oriented rule; `reversed` swaps the sides.
Rule axiom_rule(int number, bool reversed = false);

/// Directed rules that normalize zero-coefficient products: push 0*
/// through sums and products, drop 0*0 and 0*1, and collapse duplicate
/// 0*x summands. annex_merge_rule folds 0*x + 0*y into a single
/// 0*(x*y) annex monomial and is meant to run after the others.
AxiomSet annex_rules();
Rule annex_merge_rule();

/// Applies rules leftmost-outermost until none matches or the step cap
/// is hit; returns the result plus the ordered (rule, position,
/// substitution) steps. Replaying the trace reproduces the result.
std::pair<Term, RewriteTrace> apply_trace(const Term&, const AxiomSet&,
                                          std::size_t max_steps = 10000);

/// Replays a trace step by step, validating every match; throws
/// DomainError when a step does not apply.
Term replay(const Term&, const RewriteTrace&);

}  // namespace meadow

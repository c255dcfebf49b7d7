#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "meadow/flatten.hpp"
#include "meadow/poly.hpp"
#include "meadow/semantics.hpp"

namespace meadow {

/// Canonical shape of one side of an equation: identically bot, or
/// numerator/denominator polynomials plus the annex variables that only
/// gate bot-propagation. The denominator is nonzero and annex-free (its
/// annex has been shifted into the numerator); annex variables already
/// occurring in either polynomial are dropped.
struct CanonicalFracterm {
  bool bottom = false;
  Poly num;
  std::set<std::string> annex;
  Poly den;

  std::set<std::string> total_vars() const;
};

CanonicalFracterm canonicalize(const Term&);

enum class FailedCondition {
  BothNotBottom,
  VariableSets,
  ContentPrimeSupport,
  DenominatorZeroSet,
  CrossMultiplication,
};
std::string to_string(FailedCondition);

struct Countermodel {
  CarrierSpec carrier = CarrierSpec::rationals();
  Valuation valuation;
};

struct Verdict {
  bool valid = false;
  std::vector<std::string> reasons;           // conditions established, in order
  std::optional<FailedCondition> failed;      // set when invalid
  std::optional<Countermodel> countermodel;   // verified witness, when found
};

/// Limits for the countermodel search.
struct SearchBudget {
  int max_vars = 4;
  std::vector<long> primes = {2, 3, 5};
  long samples = 2000;
  std::uint64_t seed = 1;
};

/// Complete decision procedure for equations between common-meadow
/// terms. Both sides are canonicalized; the equation is valid iff both
/// sides are identically bot, or neither is and all of the following
/// hold:
///   C1  the total variable sets (numerator, annex, denominator) agree;
///   C2  the integer contents of the denominators have the same prime
///       support;
///   C3  the primitive parts of the denominators have the same zero set
///       (equal squarefree parts);
///   C4  cross-multiplication num_l * den_r == num_r * den_l holds
///       exactly in Q[X].
/// Invalid verdicts name the first failing condition and, when the
/// search finds one within budget, carry an eval-verified countermodel.
Verdict decide(const Equation&);
Verdict decide(const Equation&, const SearchBudget&, bool search = true);

/// Deterministic countermodel search: bot patterns over the rationals
/// with small constant fills, exhaustive valuations over the budget's
/// prime fields, then seeded rational sampling. Candidates are verified
/// by evaluation before being returned.
std::optional<Countermodel> find_countermodel(const Equation&, const SearchBudget& = {});

/// Machine-readable verdict block with stable key order:
/// verdict=..., condition=..., countermodel.carrier=...,
/// countermodel.<var>=... (variables in name order).
std::string format_verdict(const Verdict&);

}  // namespace meadow

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meadow/decide.hpp"
#include "meadow/rng.hpp"
#include "meadow/semantics.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Random term generation. Weights are relative constructor frequencies;
/// the defaults boost division and bot so fracterm and bot-propagation
/// paths are exercised. Same seed, same terms.
struct GenConfig {
  int max_depth = 6;
  int max_vars = 3;  // drawn from x, y, z, w
  SignatureTag signature = SignatureTag::CommonMeadow;
  std::uint64_t seed = 0;
  std::map<Kind, double> weights = default_weights();

  static std::map<Kind, double> default_weights();
};

Term gen_term(const GenConfig&);
Term gen_term(Rng&, const GenConfig&);
Equation gen_equation(Rng&, const GenConfig&);

struct AxiomCheck {
  int number = 0;
  std::string equation;
  bool pass = false;
  std::string failure;  // carrier and valuation of the counterexample
};

struct SoundnessReport {
  std::vector<AxiomCheck> axioms;
  bool all_pass = false;
  std::vector<std::string> lines() const;
};

/// Checks every axiom exhaustively over F_2, F_3, F_5, F_7 (all
/// valuations including bot) and against seeded rational sampling.
SoundnessReport soundness_suite(std::uint64_t seed = 1, long rational_samples = 1000);

struct DiffRecord {
  std::uint64_t seed = 0;
  Equation eq;
  Verdict verdict;
  std::optional<Countermodel> refutation;  // oracle's witness, if any
  bool valid_refuted = false;              // decide said valid, oracle disagrees
  std::optional<Equation> shrunk;          // minimized witness of the mismatch
  std::string line() const;
};

struct DiffReport {
  std::vector<DiffRecord> records;
  int valid_count = 0;
  int invalid_refuted = 0;
  int invalid_structural = 0;  // invalid with no oracle witness within budget
  int valid_refuted = 0;
  bool clean() const { return valid_refuted == 0; }
  std::vector<std::string> lines() const;
};

/// Differential campaign: n seeded random equations, decide's verdict
/// against the semantic oracle battery (exhaustive small prime fields
/// plus rational sampling). A valid-but-refuted record is a bug; it is
/// shrunk greedily (subterms replaced by 0, 1 or a variable) before
/// being reported.
DiffReport differential_run(int n, const GenConfig&);

/// Greedy minimization: repeatedly replaces subterms by 0, 1 or one of
/// the equation's variables while in_class stays true, so the result
/// still witnesses whatever class the input did. in_class(eq) must be
/// true on entry.
Equation shrink_equation(const Equation&, const std::function<bool(const Equation&)>& in_class);

}  // namespace meadow

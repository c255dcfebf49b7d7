#pragma once

#include <utility>

#include "meadow/normalize.hpp"
#include "meadow/rewrite.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// A single division whose components contain neither bot nor division.
struct FlatFracterm {
  Term num, den;
};

/// Rewrites any term into a flat fracterm using the division axioms
/// (bot becomes 1/0). Each axiom application is recorded in the trace;
/// replaying the trace on the input reproduces num/den. Denominators
/// are never simplified here — cancellation is unsound at zeros of the
/// denominator and is left to the decision procedure.
std::pair<FlatFracterm, RewriteTrace> flatten(const Term&);

/// Moves the denominator's zero-annex into the numerator
/// (x/(y + 0*z) = (x + 0*z)/y): the returned denominator is the rebuilt
/// annex-free polynomial part. Fracterms whose denominator reduces with
/// an empty annex are returned unchanged. Throws DomainError when the
/// denominator reduces to bottom (the fracterm is then identically bot
/// and has no annex-free form).
FlatFracterm denominator_annex_shift(const FlatFracterm&);

}  // namespace meadow

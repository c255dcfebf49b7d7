#pragma once

#include <set>
#include <string>

#include "meadow/poly.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Normal form of a division-free term: bottom, or a polynomial part
/// plus an annex of variables that only gate bot-propagation (the
/// "+ 0*(x*y*...)" tail, each variable in the first power). The annex
/// is disjoint from the variables of the polynomial part.
struct QuasiPoly {
  bool bottom = false;
  Poly poly;
  std::set<std::string> annex;

  static QuasiPoly bot();
  static QuasiPoly of(Poly p, std::set<std::string> annex);

  bool operator==(const QuasiPoly& o) const {
    return bottom == o.bottom && (bottom || (poly == o.poly && annex == o.annex));
  }
};

/// Reduces a division-free term to bottom or its canonical QuasiPoly.
/// Any bot occurrence absorbs the whole term; variables whose
/// coefficients cancel to zero move into the annex.
QuasiPoly reduce_wcr(const Term&);  // throws DomainError on division

/// Provable equality of division-free terms: true iff both sides reduce
/// to the identical QuasiPoly, which coincides with validity of the
/// equation in every common meadow.
bool wcr_equal(const Term&, const Term&);

/// The canonical term of a QuasiPoly: bot, the polynomial sumterm, or
/// sumterm + 0 * (annex variables).
Term quasipoly_to_term(const QuasiPoly&);

}  // namespace meadow

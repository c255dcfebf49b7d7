#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "meadow/errors.hpp"
#include "meadow/rational.hpp"

namespace meadow {

enum class Kind : std::uint8_t { Zero, One, Bot, Var, Add, Neg, Mul, Div };

/// Immutable term over the common-meadow signature
/// (0, 1, bot, variables, +, unary -, *, /).
/// Terms share structure; copies are cheap and all operations are pure,
/// so Terms are safe to use concurrently without coordination.
class Term {
 public:
  Term();  // the constant 0

  static Term zero();
  static Term one();
  static Term bot();
  static Term var(std::string name);
  static Term add(Term lhs, Term rhs);
  static Term neg(Term arg);
  static Term mul(Term lhs, Term rhs);
  static Term div(Term num, Term den);

  Kind kind() const;
  int arity() const;                    // 0, 1 or 2
  const std::string& var_name() const;  // Var nodes only
  Term child(int i) const;              // i < arity()

  bool operator==(const Term& other) const;  // structural
  bool operator!=(const Term& other) const { return !(*this == other); }

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs, rhs;
};

/// Signatures ordered by inclusion: Ring is bot- and division-free,
/// RingBot admits bot, Meadow admits division, CommonMeadow admits both.
enum class SignatureTag { Ring, RingBot, Meadow, CommonMeadow };

bool contains_bot(const Term&);
bool contains_div(const Term&);
bool conforms(const Term&, SignatureTag);
inline bool is_ring_term(const Term& t) { return conforms(t, SignatureTag::Ring); }
inline bool is_ring_bot_term(const Term& t) { return conforms(t, SignatureTag::RingBot); }

std::set<std::string> free_vars(const Term&);
std::set<std::string> free_vars(const Equation&);

/// Parser for the concrete grammar: unary minus binds tightest, then *
/// and / at equal precedence (left-associative), then + and binary -
/// (sugar for adding a negation). Integer literals >= 2 abbreviate the
/// canonical numerals 1+1+...; "bot" names the error element.
Term parse(const std::string& text);
Equation parse_equation(const std::string& text);
/// Reads "lhs = rhs" lines; '#' starts a comment, blank lines are skipped.
std::vector<Equation> parse_equation_file(std::istream& in);

/// Canonical printer; round-trips through parse. Canonical integer
/// numerals print as decimal literals.
std::string print(const Term&);
inline std::string print(const Equation& e) { return print(e.lhs) + " = " + print(e.rhs); }

/// Canonical numeral: integers expand to the sums 1+1+...; a non-integer
/// n/m in lowest terms (m > 0) becomes the division of integer numerals
/// with the negation outermost.
Term numeral_of(const Rat& q);
/// Recognizes canonical integer numerals (0, 1, 1+1, ... and negations
/// of the positive ones); disengaged for every other term shape.
std::optional<Int> numeral_value(const Term&);

/// Simultaneous substitution of terms for variables.
Term substitute(const Term&, const std::map<std::string, Term>& bindings);

/// Positions address subterms by child index from the root.
using Path = std::vector<int>;
Term subterm_at(const Term&, const Path&);
Term replace_at(const Term&, const Path&, const Term& replacement);

}  // namespace meadow

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Evaluation carrier: the rationals, or a prime field F_p.
class CarrierSpec {
 public:
  static CarrierSpec rationals() { return CarrierSpec(0); }
  static CarrierSpec prime_field(long p);  // throws unless p is prime

  bool is_rationals() const { return p_ == 0; }
  long prime() const { return p_; }  // 0 for the rationals

  std::string to_string() const;  // "q" or "fp:<p>"
  static CarrierSpec from_string(const std::string&);

  bool operator==(const CarrierSpec&) const = default;

 private:
  explicit CarrierSpec(long p) : p_(p) {}
  long p_;
};

/// Element of a bot-enlarged carrier: the error value, or an exact
/// rational (prime-field residues are stored as integers in [0, p)).
class MeadowValue {
 public:
  static MeadowValue bot() { return MeadowValue(); }
  static MeadowValue elem(Rat v) {
    MeadowValue m;
    m.bot_ = false;
    m.v_ = std::move(v);
    return m;
  }

  bool is_bot() const { return bot_; }
  const Rat& value() const;  // throws on bot

  bool operator==(const MeadowValue& o) const {
    return bot_ == o.bot_ && (bot_ || v_ == o.v_);
  }
  bool operator!=(const MeadowValue& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  MeadowValue() = default;
  bool bot_ = true;
  Rat v_;
};

using Valuation = std::map<std::string, MeadowValue>;

std::string to_string(const Valuation&);  // "x=bot,y=2"; "" when empty

/// Total evaluation: bot absorbs through every operation, and x/0 = bot
/// for every x. Division elsewhere multiplies by the unique inverse.
/// Throws DomainError on variables the valuation does not cover.
MeadowValue eval(const Term&, const Valuation&, const CarrierSpec&);

/// Tries all (p+1)^k valuations over the prime-field elements plus bot
/// (elements ascending, bot last; the last variable varies fastest) and
/// returns the first valuation on which the sides evaluate differently.
/// Throws DomainError when the equation has more than max_vars variables
/// or the carrier is not finite.
std::optional<Valuation> exhaustive_check(const Equation&, const CarrierSpec&, int max_vars = 4);

/// Randomized refutation, deterministic for a given seed. A fixed
/// pre-pass (all variables 1, each single variable bot, all bot) runs
/// first so bot-driven counterexamples are found reliably; the n drawn
/// valuations then make each variable bot with probability 1/8 and a
/// small carrier element otherwise. Returns the first counterexample,
/// or nothing if none was found.
std::optional<Valuation> sample_check(const Equation&, const CarrierSpec&, long n,
                                      std::uint64_t seed);

}  // namespace meadow

#include "meadow/semantics.hpp"

#include <vector>

#include "meadow/rng.hpp"

namespace meadow {

CarrierSpec CarrierSpec::prime_field(long p) {
  if (!is_prime(Int(p))) throw DomainError("carrier modulus " + std::to_string(p) + " is not prime");
  return CarrierSpec(p);
}

std::string CarrierSpec::to_string() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

CarrierSpec CarrierSpec::from_string(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return prime_field(std::stol(s.substr(3)));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("malformed carrier '" + s + "'");
    }
  }
  throw DomainError("malformed carrier '" + s + "' (expected q or fp:<prime>)");
}

const Rat& MeadowValue::value() const {
  if (bot_) throw DomainError("value() on bot");
  return v_;
}

std::string MeadowValue::to_string() const { return bot_ ? "bot" : meadow::to_string(v_); }

std::string to_string(const Valuation& val) {
  std::string out;
  for (const auto& [name, v] : val) {
    if (!out.empty()) out += ',';
    out += name + "=" + v.to_string();
  }
  return out;
}

namespace {

Rat fp_wrap(const Int& n, long p) {
  Int r = n % p;
  if (r < 0) r += p;
  return Rat(r);
}

}  // namespace

MeadowValue eval(const Term& t, const Valuation& val, const CarrierSpec& c) {
  switch (t.kind()) {
    case Kind::Zero: return MeadowValue::elem(Rat(0));
    case Kind::One: return MeadowValue::elem(Rat(1));
    case Kind::Bot: return MeadowValue::bot();
    case Kind::Var: {
      auto it = val.find(t.var_name());
      if (it == val.end()) throw DomainError("unbound variable '" + t.var_name() + "'");
      if (!c.is_rationals() && !it->second.is_bot())
        return MeadowValue::elem(fp_wrap(it->second.value().get_num(), c.prime()));
      return it->second;
    }
    case Kind::Neg: {
      MeadowValue a = eval(t.child(0), val, c);
      if (a.is_bot()) return a;
      if (c.is_rationals()) return MeadowValue::elem(-a.value());
      return MeadowValue::elem(fp_wrap(-a.value().get_num(), c.prime()));
    }
    case Kind::Add:
    case Kind::Mul: {
      MeadowValue a = eval(t.child(0), val, c);
      MeadowValue b = eval(t.child(1), val, c);
      if (a.is_bot() || b.is_bot()) return MeadowValue::bot();
      Rat r;
      if (t.kind() == Kind::Add)
        r = a.value() + b.value();
      else
        r = a.value() * b.value();
      if (!c.is_rationals()) r = fp_wrap(r.get_num(), c.prime());
      return MeadowValue::elem(std::move(r));
    }
    case Kind::Div: {
      MeadowValue a = eval(t.child(0), val, c);
      MeadowValue b = eval(t.child(1), val, c);
      if (a.is_bot() || b.is_bot()) return MeadowValue::bot();
      if (b.value() == 0) return MeadowValue::bot();
      if (c.is_rationals()) return MeadowValue::elem(a.value() / b.value());
      Int p(c.prime()), inv;
      mpz_invert(inv.get_mpz_t(), b.value().get_num().get_mpz_t(), p.get_mpz_t());
      return MeadowValue::elem(fp_wrap(a.value().get_num() * inv, c.prime()));
    }
  }
  throw DomainError("unreachable term kind");
}

std::optional<Valuation> exhaustive_check(const Equation& e, const CarrierSpec& c, int max_vars) {
  if (c.is_rationals()) throw DomainError("exhaustive check requires a finite carrier");
  const auto fv = free_vars(e);
  std::vector<std::string> vars(fv.begin(), fv.end());
  if (static_cast<int>(vars.size()) > max_vars)
    throw DomainError("variable bound exceeded: " + std::to_string(vars.size()) + " > " +
                      std::to_string(max_vars));

  const long p = c.prime();
  std::vector<MeadowValue> values;
  for (long i = 0; i < p; ++i) values.push_back(MeadowValue::elem(Rat(i)));
  values.push_back(MeadowValue::bot());

  std::vector<std::size_t> odo(vars.size(), 0);
  for (;;) {
    Valuation val;
    for (std::size_t i = 0; i < vars.size(); ++i) val.emplace(vars[i], values[odo[i]]);
    if (eval(e.lhs, val, c) != eval(e.rhs, val, c)) return val;
    // advance the odometer, last variable fastest
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++odo[i] < values.size()) break;
      odo[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (vars.empty()) return std::nullopt;
  }
}

std::optional<Valuation> sample_check(const Equation& e, const CarrierSpec& c, long n,
                                      std::uint64_t seed) {
  const auto fv = free_vars(e);
  std::vector<std::string> vars(fv.begin(), fv.end());
  auto differs = [&](const Valuation& val) { return eval(e.lhs, val, c) != eval(e.rhs, val, c); };

  // Deterministic pre-pass: all ones, every single-variable bot, all bot.
  Valuation ones;
  for (const auto& v : vars) ones.emplace(v, MeadowValue::elem(Rat(1)));
  if (differs(ones)) return ones;
  for (const auto& v : vars) {
    Valuation val = ones;
    val.at(v) = MeadowValue::bot();
    if (differs(val)) return val;
  }
  if (vars.size() >= 2) {
    Valuation val;
    for (const auto& v : vars) val.emplace(v, MeadowValue::bot());
    if (differs(val)) return val;
  }
  if (vars.empty()) return std::nullopt;

  Rng rng(seed);
  for (long i = 0; i < n; ++i) {
    Valuation val;
    for (const auto& v : vars) {
      if (rng.one_in(8)) {
        val.emplace(v, MeadowValue::bot());
      } else if (c.is_rationals()) {
        Int num(rng.range(-9, 9)), den(rng.range(1, 9));
        val.emplace(v, MeadowValue::elem(make_rat(num, den)));
      } else {
        val.emplace(v, MeadowValue::elem(Rat(static_cast<long>(rng.below(c.prime())))));
      }
    }
    if (differs(val)) return val;
  }
  return std::nullopt;
}

}  // namespace meadow

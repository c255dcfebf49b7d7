#include "meadow/poly.hpp"

#include <algorithm>
#include <vector>

namespace meadow {

namespace {

unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [v, e] : b) out[v] += e;
  return out;
}

// a / b; disengaged unless b divides a.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [v, e] : b) {
    auto it = out.find(v);
    if (it == out.end() || it->second < e) return std::nullopt;
    if (it->second == e)
      out.erase(it);
    else
      it->second -= e;
  }
  return out;
}

}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) {
      // the map owning the lex-earlier variable has a positive exponent
      // on it while the other has zero there
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib != b.end();
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.add_term(Monomial{{name, 1}}, Rat(1));
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rat Poly::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value on a non-constant polynomial");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : monomial_degree(terms_.rbegin()->first);
}

unsigned Poly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(Rat(1));
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

Poly Poly::derivative(const std::string& var) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it == m.end()) continue;
    Monomial dm = m;
    if (it->second == 1)
      dm.erase(var);
    else
      dm[var] -= 1;
    out.add_term(dm, c * Rat(it->second));
  }
  return out;
}

Rat Poly::evaluate(const std::map<std::string, Rat>& point) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("evaluate: unbound variable '" + v + "'");
      for (unsigned i = 0; i < e; ++i) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += meadow::to_string(a);
    } else {
      if (a != 1) out += meadow::to_string(a) + '*';
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term translations

Poly term_to_poly(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero: return Poly();
    case Kind::One: return Poly::constant(Rat(1));
    case Kind::Bot: throw DomainError("term contains bot; not a ring term");
    case Kind::Var: return Poly::variable(t.var_name());
    case Kind::Add: return term_to_poly(t.child(0)) + term_to_poly(t.child(1));
    case Kind::Neg: return -term_to_poly(t.child(0));
    case Kind::Mul: return term_to_poly(t.child(0)) * term_to_poly(t.child(1));
    case Kind::Div: {
      // fraction numerals only: both sides must be closed
      if (!free_vars(t).empty())
        throw DomainError("term contains non-constant division; not a ring term");
      Poly n = term_to_poly(t.child(0)), d = term_to_poly(t.child(1));
      if (d.constant_value() == 0) throw DomainError("constant fraction with zero denominator");
      return Poly::constant(n.constant_value() / d.constant_value());
    }
  }
  throw DomainError("unreachable term kind");
}

namespace {

Term pure_monomial_term(const Monomial& m) {
  std::optional<Term> acc;
  for (const auto& [v, e] : m)
    for (unsigned i = 0; i < e; ++i) {
      Term var = Term::var(v);
      acc = acc ? Term::mul(std::move(*acc), std::move(var)) : std::move(var);
    }
  return *acc;
}

Term monomial_term(const Monomial& m, const Rat& c) {
  if (m.empty()) return numeral_of(c);
  if (c == 1) return pure_monomial_term(m);
  if (c == -1) return Term::neg(pure_monomial_term(m));
  // flat left-associated product: coefficient first, then the variables
  Term acc = numeral_of(c);
  for (const auto& [v, e] : m)
    for (unsigned i = 0; i < e; ++i) acc = Term::mul(std::move(acc), Term::var(v));
  return acc;
}

}  // namespace

Term poly_to_sumterm(const Poly& p) {
  if (p.is_zero()) return Term::zero();
  std::optional<Term> acc;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Term mono = monomial_term(it->first, it->second);
    acc = acc ? Term::add(std::move(*acc), std::move(mono)) : std::move(mono);
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Content, gcd, squarefree machinery

namespace {
int sign_of(const Rat& q) { return q < 0 ? -1 : 1; }
}  // namespace

ContentSplit content_primitive(const Poly& p) {
  if (p.is_zero()) throw DomainError("content of the zero polynomial");
  Int den_lcm = 1;
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.get_den());
  Int num_gcd = 0;
  for (const auto& [m, c] : p.terms())
    num_gcd = ::gcd(num_gcd, Int(c.get_num() * (den_lcm / c.get_den())));
  num_gcd = abs(num_gcd);
  int sign = sign_of(p.leading_coeff());
  ContentSplit out;
  out.content = make_rat(num_gcd, den_lcm);
  out.sign = sign;
  out.primitive = p.scaled(make_rat(sign * den_lcm, num_gcd));
  return out;
}

std::optional<Poly> try_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  Poly q, r = f;
  const Monomial& gm = g.leading_monomial();
  const Rat& gc = g.leading_coeff();
  while (!r.is_zero()) {
    auto m = monomial_div(r.leading_monomial(), gm);
    if (!m) return std::nullopt;
    Poly step = Poly::monomial(*m, r.leading_coeff() / gc);
    q += step;
    r -= step * g;
  }
  return q;
}

namespace {

// Univariate view in a main variable: degree -> coefficient polynomial
// (free of that variable).
using UniView = std::map<unsigned, Poly>;

UniView view_in(const Poly& p, const std::string& v) {
  UniView out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = 0;
    Monomial rest = m;
    if (auto it = rest.find(v); it != rest.end()) {
      e = it->second;
      rest.erase(it);
    }
    out[e] += Poly::monomial(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Poly from_view(const UniView& u, const std::string& v) {
  Poly out;
  for (const auto& [e, c] : u) {
    Monomial m;
    if (e > 0) m[v] = e;
    out += c * Poly::monomial(m, Rat(1));
  }
  return out;
}

unsigned view_deg(const UniView& u) { return u.empty() ? 0 : u.rbegin()->first; }

Poly gcd_z(const Poly& a, const Poly& b);

Poly view_content(const UniView& u) {
  Poly g;
  for (const auto& [e, c] : u) g = g.is_zero() ? c : gcd_z(g, c);
  return g;
}

UniView view_divide_exact(const UniView& u, const Poly& d) {
  UniView out;
  for (const auto& [e, c] : u) {
    auto q = try_divide(c, d);
    if (!q) throw DomainError("internal: inexact content division");
    out.emplace(e, std::move(*q));
  }
  return out;
}

// Pseudo-remainder of A by B in the main variable (deg B >= 1).
UniView prem(UniView a, const UniView& b) {
  const unsigned db = view_deg(b);
  const Poly& lb = b.rbegin()->second;
  while (!a.empty() && view_deg(a) >= db) {
    const unsigned da = view_deg(a);
    Poly la = a.rbegin()->second;
    UniView next;
    for (const auto& [e, c] : a) {
      Poly t = lb * c;
      if (!t.is_zero()) next[e] += t;
    }
    for (const auto& [e, c] : b) next[e + da - db] -= la * c;
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    a = std::move(next);
  }
  return a;
}

Poly positive_primitive(const Poly& p) { return content_primitive(p).primitive; }

// gcd of two integer-primitive polynomials, result primitive.
Poly primitive_gcd(const Poly& a, const Poly& b) {
  if (a == b) return positive_primitive(a);
  std::set<std::string> vars = a.variables();
  for (const auto& v : b.variables()) vars.insert(v);
  if (vars.empty()) return Poly::constant(Rat(1));

  const std::string v = *vars.rbegin();  // last variable is the main one
  unsigned da = a.degree_in(v), db = b.degree_in(v);
  if (da == 0 || db == 0) {
    // a common divisor cannot involve v, so it divides the v-content
    // of the side that does
    const Poly& flat = da == 0 ? a : b;
    const Poly& other = da == 0 ? b : a;
    return positive_primitive(gcd_z(flat, view_content(view_in(other, v))));
  }

  UniView va = view_in(a, v), vb = view_in(b, v);
  Poly ca = view_content(va), cb = view_content(vb);
  va = view_divide_exact(va, ca);
  vb = view_divide_exact(vb, cb);
  Poly d = gcd_z(ca, cb);

  if (view_deg(va) < view_deg(vb)) std::swap(va, vb);
  Poly g;
  for (;;) {
    UniView r = prem(va, vb);
    if (r.empty()) {
      g = from_view(vb, v);
      break;
    }
    if (view_deg(r) == 0) {
      // v-free remainder: the v-primitive parts are coprime
      g = Poly::constant(Rat(1));
      break;
    }
    va = std::move(vb);
    vb = view_divide_exact(r, view_content(r));
  }
  return positive_primitive(d * g);
}

// Full gcd in Z[X]: integer content gcd times primitive-part gcd.
Poly gcd_z(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return positive_primitive(b).scaled(content_primitive(b).content);
  if (b.is_zero()) return positive_primitive(a).scaled(content_primitive(a).content);
  ContentSplit sa = content_primitive(a), sb = content_primitive(b);
  Int ia = sa.content.get_num(), ib = sb.content.get_num();
  Poly g = primitive_gcd(sa.primitive, sb.primitive);
  return g.scaled(Rat(::gcd(ia, ib)));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return positive_primitive(b);
  if (b.is_zero()) return positive_primitive(a);
  return positive_primitive(primitive_gcd(positive_primitive(a), positive_primitive(b)));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  Poly a = positive_primitive(p);
  auto vars = a.variables();
  if (vars.empty()) return Poly::constant(Rat(1));
  Poly g = a;
  for (const auto& v : vars) g = gcd(g, a.derivative(v));
  auto sf = try_divide(a, g);
  if (!sf) throw DomainError("internal: squarefree division failed");
  return positive_primitive(*sf);
}

bool same_zero_set(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("same_zero_set on the zero polynomial");
  return squarefree_part(a) == squarefree_part(b);
}

}  // namespace meadow

#include "meadow/term.hpp"

#include <cctype>
#include <istream>
#include <utility>

namespace meadow {

struct Term::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> a, b;
};

namespace {

std::shared_ptr<const Term::Node> make_node(Kind k, std::string name,
                                            std::shared_ptr<const Term::Node> a,
                                            std::shared_ptr<const Term::Node> b) {
  return std::make_shared<const Term::Node>(Term::Node{k, std::move(name), std::move(a), std::move(b)});
}

const std::shared_ptr<const Term::Node>& leaf(Kind k) {
  static const auto zero = make_node(Kind::Zero, {}, nullptr, nullptr);
  static const auto one = make_node(Kind::One, {}, nullptr, nullptr);
  static const auto bot = make_node(Kind::Bot, {}, nullptr, nullptr);
  switch (k) {
    case Kind::Zero: return zero;
    case Kind::One: return one;
    default: return bot;
  }
}

}  // namespace

Term::Term() : node_(leaf(Kind::Zero)) {}
Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::zero() { return Term(leaf(Kind::Zero)); }
Term Term::one() { return Term(leaf(Kind::One)); }
Term Term::bot() { return Term(leaf(Kind::Bot)); }

Term Term::var(std::string name) {
  if (name.empty()) throw DomainError("variable names must be nonempty");
  return Term(make_node(Kind::Var, std::move(name), nullptr, nullptr));
}

Term Term::add(Term lhs, Term rhs) {
  return Term(make_node(Kind::Add, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
Term Term::neg(Term arg) {
  return Term(make_node(Kind::Neg, {}, std::move(arg.node_), nullptr));
}
Term Term::mul(Term lhs, Term rhs) {
  return Term(make_node(Kind::Mul, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
Term Term::div(Term num, Term den) {
  return Term(make_node(Kind::Div, {}, std::move(num.node_), std::move(den.node_)));
}

Kind Term::kind() const { return node_->kind; }

int Term::arity() const {
  switch (node_->kind) {
    case Kind::Add:
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 1;
    default: return 0;
  }
}

const std::string& Term::var_name() const {
  if (node_->kind != Kind::Var) throw DomainError("var_name on a non-variable term");
  return node_->name;
}

Term Term::child(int i) const {
  if (i < 0 || i >= arity()) throw DomainError("child index out of range");
  return Term(i == 0 ? node_->a : node_->b);
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var: return node_->name == other.node_->name;
    case Kind::Neg: return child(0) == other.child(0);
    case Kind::Add:
    case Kind::Mul:
    case Kind::Div: return child(0) == other.child(0) && child(1) == other.child(1);
    default: return true;
  }
}

bool contains_bot(const Term& t) {
  if (t.kind() == Kind::Bot) return true;
  for (int i = 0; i < t.arity(); ++i)
    if (contains_bot(t.child(i))) return true;
  return false;
}

bool contains_div(const Term& t) {
  if (t.kind() == Kind::Div) return true;
  for (int i = 0; i < t.arity(); ++i)
    if (contains_div(t.child(i))) return true;
  return false;
}

bool conforms(const Term& t, SignatureTag sig) {
  switch (sig) {
    case SignatureTag::Ring: return !contains_bot(t) && !contains_div(t);
    case SignatureTag::RingBot: return !contains_div(t);
    case SignatureTag::Meadow: return !contains_bot(t);
    case SignatureTag::CommonMeadow: return true;
  }
  return false;
}

namespace {
void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Kind::Var) {
    out.insert(t.var_name());
    return;
  }
  for (int i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out);
}
}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Equation& e) {
  std::set<std::string> out;
  collect_vars(e.lhs, out);
  collect_vars(e.rhs, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Integer literals expand to 1+1+...; cap the expansion so a stray huge
// literal cannot exhaust memory.
constexpr unsigned long kMaxLiteral = 1000000;

struct Lexer {
  enum class Tok { Int, Ident, Plus, Minus, Star, Slash, LParen, RParen, Eq, End };

  explicit Lexer(const std::string& in) : s(in) { advance(); }

  const std::string& s;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string text;
  std::size_t tok_pos = 0;

  void advance() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    tok_pos = pos;
    text.clear();
    if (pos == s.size()) {
      tok = Tok::End;
      return;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) text += s[pos++];
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        text += s[pos++];
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '=': tok = Tok::Eq; return;
      default: throw ParseError(std::string("unknown token '") + c + "'", tok_pos);
    }
  }
};

Term integer_numeral(unsigned long n) {
  if (n == 0) return Term::zero();
  Term t = Term::one();
  for (unsigned long i = 1; i < n; ++i) t = Term::add(std::move(t), Term::one());
  return t;
}

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& in) : lx(in) {}

  Term sum() {
    Term t = prod();
    while (lx.tok == Lexer::Tok::Plus || lx.tok == Lexer::Tok::Minus) {
      bool minus = lx.tok == Lexer::Tok::Minus;
      lx.advance();
      Term r = prod();
      t = Term::add(std::move(t), minus ? Term::neg(std::move(r)) : std::move(r));
    }
    return t;
  }

  Term prod() {
    Term t = unary();
    while (lx.tok == Lexer::Tok::Star || lx.tok == Lexer::Tok::Slash) {
      bool div = lx.tok == Lexer::Tok::Slash;
      lx.advance();
      Term r = unary();
      t = div ? Term::div(std::move(t), std::move(r)) : Term::mul(std::move(t), std::move(r));
    }
    return t;
  }

  Term unary() {
    if (lx.tok == Lexer::Tok::Minus) {
      lx.advance();
      return Term::neg(unary());
    }
    return atom();
  }

  Term atom() {
    switch (lx.tok) {
      case Lexer::Tok::Int: {
        unsigned long n = 0;
        try {
          n = std::stoul(lx.text);
        } catch (const std::exception&) {
          throw ParseError("integer literal too large", lx.tok_pos);
        }
        if (n > kMaxLiteral) throw ParseError("integer literal too large", lx.tok_pos);
        lx.advance();
        return integer_numeral(n);
      }
      case Lexer::Tok::Ident: {
        std::string name = lx.text;
        lx.advance();
        if (name == "bot") return Term::bot();
        return Term::var(std::move(name));
      }
      case Lexer::Tok::LParen: {
        lx.advance();
        Term t = sum();
        if (lx.tok != Lexer::Tok::RParen) throw ParseError("expected ')'", lx.tok_pos);
        lx.advance();
        return t;
      }
      default: throw ParseError("expected an expression", lx.tok_pos);
    }
  }
};

}  // namespace

Term parse(const std::string& text) {
  Parser p(text);
  Term t = p.sum();
  if (p.lx.tok != Lexer::Tok::End) throw ParseError("unexpected trailing input", p.lx.tok_pos);
  return t;
}

Equation parse_equation(const std::string& text) {
  Parser p(text);
  Term lhs = p.sum();
  if (p.lx.tok != Lexer::Tok::Eq) throw ParseError("expected '='", p.lx.tok_pos);
  p.lx.advance();
  Term rhs = p.sum();
  if (p.lx.tok != Lexer::Tok::End) throw ParseError("unexpected trailing input", p.lx.tok_pos);
  return {std::move(lhs), std::move(rhs)};
}

std::vector<Equation> parse_equation_file(std::istream& in) {
  std::vector<Equation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    try {
      out.push_back(parse_equation(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Left spine of ones: 1, 1+1, (1+1)+1, ...
std::optional<Int> positive_spine(const Term& t) {
  Int n = 0;
  Term cur = t;
  while (cur.kind() == Kind::Add) {
    if (cur.child(1).kind() != Kind::One) return std::nullopt;
    ++n;
    cur = cur.child(0);
  }
  if (cur.kind() != Kind::One) return std::nullopt;
  return n + 1;
}

// Precedence levels: sum 1, product 2, unary 3, atoms 4.
void render(const Term& t, int ctx, std::string& out) {
  if (t.kind() == Kind::Add) {
    if (auto n = positive_spine(t); n && *n >= 2) {  // decimal sugar, atom level
      out += n->get_str();
      return;
    }
  }
  switch (t.kind()) {
    case Kind::Zero: out += '0'; return;
    case Kind::One: out += '1'; return;
    case Kind::Bot: out += "bot"; return;
    case Kind::Var: out += t.var_name(); return;
    case Kind::Add: {
      bool paren = ctx > 1;
      if (paren) out += '(';
      render(t.child(0), 1, out);
      out += " + ";
      Term r = t.child(1);
      if (r.kind() == Kind::Neg) {  // "x + (-y)" rather than "x + -y"
        out += '(';
        render(r, 0, out);
        out += ')';
      } else {
        render(r, 2, out);
      }
      if (paren) out += ')';
      return;
    }
    case Kind::Mul: {
      bool paren = ctx > 2;
      if (paren) out += '(';
      render(t.child(0), 2, out);
      out += " * ";
      render(t.child(1), 3, out);
      if (paren) out += ')';
      return;
    }
    case Kind::Div: {
      bool paren = ctx > 2;
      if (paren) out += '(';
      render(t.child(0), 2, out);
      out += '/';
      render(t.child(1), 3, out);
      if (paren) out += ')';
      return;
    }
    case Kind::Neg: {
      out += '-';
      Term c = t.child(0);
      if (c.kind() == Kind::Neg) {
        out += '(';
        render(c, 0, out);
        out += ')';
      } else {
        render(c, 3, out);
      }
      return;
    }
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  render(t, 0, out);
  return out;
}

Term numeral_of(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (is_integer(c)) {
    Int n = c.get_num();
    if (n == 0) return Term::zero();
    bool negative = n < 0;
    if (negative) n = -n;
    Term t = Term::one();
    for (Int i = 1; i < n; ++i) t = Term::add(std::move(t), Term::one());
    return negative ? Term::neg(std::move(t)) : t;
  }
  Int n = c.get_num(), m = c.get_den();
  bool negative = n < 0;
  if (negative) n = -n;
  Term t = Term::div(numeral_of(Rat(n)), numeral_of(Rat(m)));
  return negative ? Term::neg(std::move(t)) : t;
}

std::optional<Int> numeral_value(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero: return Int(0);
    case Kind::One: return Int(1);
    case Kind::Add: return positive_spine(t);
    case Kind::Neg:
      if (auto n = positive_spine(t.child(0))) return -*n;
      return std::nullopt;
    default: return std::nullopt;
  }
}

Term substitute(const Term& t, const std::map<std::string, Term>& bindings) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = bindings.find(t.var_name());
      return it == bindings.end() ? t : it->second;
    }
    case Kind::Add: return Term::add(substitute(t.child(0), bindings), substitute(t.child(1), bindings));
    case Kind::Mul: return Term::mul(substitute(t.child(0), bindings), substitute(t.child(1), bindings));
    case Kind::Div: return Term::div(substitute(t.child(0), bindings), substitute(t.child(1), bindings));
    case Kind::Neg: return Term::neg(substitute(t.child(0), bindings));
    default: return t;
  }
}

Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (int i : path) cur = cur.child(i);
  return cur;
}

Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  if (path.empty()) return replacement;
  int head = path.front();
  Path rest(path.begin() + 1, path.end());
  Term changed = replace_at(t.child(head), rest, replacement);
  switch (t.kind()) {
    case Kind::Add:
      return head == 0 ? Term::add(changed, t.child(1)) : Term::add(t.child(0), changed);
    case Kind::Mul:
      return head == 0 ? Term::mul(changed, t.child(1)) : Term::mul(t.child(0), changed);
    case Kind::Div:
      return head == 0 ? Term::div(changed, t.child(1)) : Term::div(t.child(0), changed);
    case Kind::Neg: return Term::neg(changed);
    default: throw DomainError("path does not address a subterm");
  }
}

}  // namespace meadow

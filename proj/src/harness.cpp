#include "meadow/harness.hpp"

#include <array>
#include <cmath>

#include "meadow/rewrite.hpp"

namespace meadow {

std::map<Kind, double> GenConfig::default_weights() {
  return {{Kind::Zero, 1}, {Kind::One, 1}, {Kind::Var, 2}, {Kind::Add, 2},
          {Kind::Neg, 1},  {Kind::Mul, 2}, {Kind::Div, 4}, {Kind::Bot, 2}};
}

namespace {

constexpr std::array<const char*, 4> kVarPool = {"x", "y", "z", "w"};

long weight_of(const GenConfig& cfg, Kind k) {
  auto it = cfg.weights.find(k);
  if (it == cfg.weights.end()) return 0;
  if (it->second < 0) throw DomainError("generator weights must be positive");
  return std::lround(it->second * 16);
}

Term gen(Rng& rng, const GenConfig& cfg, int depth) {
  const bool allow_bot =
      cfg.signature == SignatureTag::RingBot || cfg.signature == SignatureTag::CommonMeadow;
  const bool allow_div =
      cfg.signature == SignatureTag::Meadow || cfg.signature == SignatureTag::CommonMeadow;

  std::vector<Kind> kinds = {Kind::Zero, Kind::One};
  if (cfg.max_vars > 0) kinds.push_back(Kind::Var);
  if (allow_bot) kinds.push_back(Kind::Bot);
  if (depth > 0) {
    kinds.push_back(Kind::Add);
    kinds.push_back(Kind::Neg);
    kinds.push_back(Kind::Mul);
    if (allow_div) kinds.push_back(Kind::Div);
  }

  long total = 0;
  for (Kind k : kinds) total += weight_of(cfg, k);
  if (total <= 0) throw DomainError("generator weights sum to zero");
  long pick = static_cast<long>(rng.below(static_cast<std::uint64_t>(total)));
  Kind chosen = kinds.back();
  for (Kind k : kinds) {
    pick -= weight_of(cfg, k);
    if (pick < 0) {
      chosen = k;
      break;
    }
  }

  switch (chosen) {
    case Kind::Zero: return Term::zero();
    case Kind::One: return Term::one();
    case Kind::Bot: return Term::bot();
    case Kind::Var:
      return Term::var(kVarPool[rng.below(std::min<std::uint64_t>(cfg.max_vars, kVarPool.size()))]);
    case Kind::Neg: return Term::neg(gen(rng, cfg, depth - 1));
    case Kind::Add: return Term::add(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
    case Kind::Mul: return Term::mul(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
    case Kind::Div: return Term::div(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1));
  }
  throw DomainError("unreachable kind");
}

}  // namespace

Term gen_term(Rng& rng, const GenConfig& cfg) { return gen(rng, cfg, cfg.max_depth); }

Term gen_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_term(rng, cfg);
}

Equation gen_equation(Rng& rng, const GenConfig& cfg) {
  Term lhs = gen_term(rng, cfg);
  Term rhs = gen_term(rng, cfg);
  return {std::move(lhs), std::move(rhs)};
}

std::vector<std::string> SoundnessReport::lines() const {
  std::vector<std::string> out;
  for (const auto& a : axioms) {
    std::string line = "axiom " + std::to_string(a.number) + ": " + a.equation + "  ";
    line += a.pass ? "pass" : "FAIL (" + a.failure + ")";
    out.push_back(std::move(line));
  }
  out.push_back(all_pass ? "soundness: all axioms pass" : "soundness: FAILURES PRESENT");
  return out;
}

SoundnessReport soundness_suite(std::uint64_t seed, long rational_samples) {
  SoundnessReport rep;
  rep.all_pass = true;
  const auto& table = axiom_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    AxiomCheck check;
    check.number = static_cast<int>(i + 1);
    check.equation = print(table[i]);
    check.pass = true;
    for (long p : {2L, 3L, 5L, 7L}) {
      CarrierSpec c = CarrierSpec::prime_field(p);
      if (auto cv = exhaustive_check(table[i], c, 4)) {
        check.pass = false;
        check.failure = c.to_string() + " {" + to_string(*cv) + "}";
        break;
      }
    }
    if (check.pass) {
      if (auto cv = sample_check(table[i], CarrierSpec::rationals(), rational_samples, seed + i)) {
        check.pass = false;
        check.failure = "q {" + to_string(*cv) + "}";
      }
    }
    rep.all_pass = rep.all_pass && check.pass;
    rep.axioms.push_back(std::move(check));
  }
  return rep;
}

namespace {

SearchBudget battery_budget(const GenConfig& cfg, std::uint64_t seed) {
  SearchBudget b;
  b.primes = {2, 3, 5, 7};
  b.samples = 2000;
  b.max_vars = std::max(cfg.max_vars, 4);
  b.seed = seed;
  return b;
}

bool mismatch_class(const Equation& e, const SearchBudget& battery) {
  Verdict v = decide(e, battery, /*search=*/false);
  return v.valid && find_countermodel(e, battery).has_value();
}

void collect_paths(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (int i = 0; i < t.arity(); ++i) {
    cur.push_back(i);
    collect_paths(t.child(i), cur, out);
    cur.pop_back();
  }
}

}  // namespace

Equation shrink_equation(const Equation& eq0,
                         const std::function<bool(const Equation&)>& in_class) {
  Equation eq = eq0;
  std::vector<Term> replacements = {Term::zero(), Term::one()};
  for (const auto& v : free_vars(eq0)) replacements.push_back(Term::var(v));

  bool improved = true;
  for (int round = 0; improved && round < 200; ++round) {
    improved = false;
    for (int side = 0; side < 2 && !improved; ++side) {
      const Term& cur = side == 0 ? eq.lhs : eq.rhs;
      std::vector<Path> paths;
      Path scratch;
      collect_paths(cur, scratch, paths);
      for (const Path& p : paths) {
        Term sub = subterm_at(cur, p);
        for (const Term& r : replacements) {
          if (sub == r) continue;
          Equation cand = eq;
          (side == 0 ? cand.lhs : cand.rhs) = replace_at(cur, p, r);
          if (in_class(cand)) {
            eq = std::move(cand);
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
    }
  }
  return eq;
}

std::string DiffRecord::line() const {
  std::string out = "seed=" + std::to_string(seed);
  out += "\tverdict=" + std::string(verdict.valid ? "valid" : "invalid");
  out += "\tcondition=" + (verdict.failed ? to_string(*verdict.failed) : std::string("-"));
  if (refutation) {
    out += "\toracle=" + refutation->carrier.to_string();
    std::string vs = to_string(refutation->valuation);
    if (!vs.empty()) out += ";" + vs;
  } else {
    out += "\toracle=none";
  }
  out += "\tshrink=" + (shrunk ? print(*shrunk) : std::string("-"));
  out += "\teq=" + print(eq);
  return out;
}

std::vector<std::string> DiffReport::lines() const {
  std::vector<std::string> out;
  for (const auto& r : records) out.push_back(r.line());
  out.push_back("summary: " + std::to_string(records.size()) + " equations, " +
                std::to_string(valid_count) + " valid, " + std::to_string(invalid_refuted) +
                " invalid refuted, " + std::to_string(invalid_structural) +
                " invalid structural-only, " + std::to_string(valid_refuted) +
                " valid-but-refuted");
  return out;
}

DiffReport differential_run(int n, const GenConfig& cfg) {
  DiffReport rep;
  for (int i = 0; i < n; ++i) {
    DiffRecord rec;
    rec.seed = cfg.seed + static_cast<std::uint64_t>(i);
    Rng rng(rec.seed);
    rec.eq = gen_equation(rng, cfg);

    SearchBudget battery = battery_budget(cfg, rec.seed);
    rec.verdict = decide(rec.eq, battery, /*search=*/true);
    if (rec.verdict.valid) {
      ++rep.valid_count;
      rec.refutation = find_countermodel(rec.eq, battery);
      if (rec.refutation) {
        rec.valid_refuted = true;
        ++rep.valid_refuted;
        rec.shrunk = shrink_equation(
            rec.eq, [&](const Equation& cand) { return mismatch_class(cand, battery); });
      }
    } else {
      rec.refutation = rec.verdict.countermodel;
      if (rec.refutation)
        ++rep.invalid_refuted;
      else
        ++rep.invalid_structural;
    }
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace meadow

// Command-line front end for the common-meadow toolkit.
//
// Exit status: 0 on success / valid / all-pass, 1 on invalid or failing
// reports, 2 on usage and input errors.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meadow/decide.hpp"
#include "meadow/flatten.hpp"
#include "meadow/harness.hpp"
#include "meadow/normalize.hpp"
#include "meadow/semantics.hpp"
#include "meadow/term.hpp"

namespace {

std::string path_to_string(const meadow::Path& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string subst_to_string(const meadow::Subst& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, term] : s) {
    if (!first) out += ", ";
    first = false;
    out += var + " := " + meadow::print(term);
  }
  return out + "}";
}

// Formats a flat fracterm as "num / den" with parentheses exactly where
// the grammar needs them.
std::string fracterm_to_string(const meadow::FlatFracterm& f) {
  std::string num = meadow::print(f.num);
  std::string den = meadow::print(f.den);
  if (f.num.arity() == 2) num = "(" + num + ")";
  if (f.den.arity() == 2 || f.den.kind() == meadow::Kind::Neg) den = "(" + den + ")";
  return num + " / " + den;
}

meadow::SignatureTag parse_signature(const std::string& s) {
  if (s == "ring") return meadow::SignatureTag::Ring;
  if (s == "ringbot") return meadow::SignatureTag::RingBot;
  if (s == "meadow") return meadow::SignatureTag::Meadow;
  if (s == "cm") return meadow::SignatureTag::CommonMeadow;
  throw meadow::DomainError("unknown signature '" + s + "' (ring, ringbot, meadow, cm)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace meadow;

  CLI::App app{"common-meadow toolkit: total division with an absorptive error element"};
  app.require_subcommand(1);
  std::function<int()> run;

  // parse
  {
    auto* cmd = app.add_subcommand("parse", "parse an expression and echo its canonical form");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "expression")->required();
    cmd->callback([expr, &run] {
      run = [expr] {
        std::cout << print(parse(*expr)) << "\n";
        return 0;
      };
    });
  }

  // eval
  {
    auto* cmd = app.add_subcommand("eval", "evaluate an expression under a valuation");
    auto expr = std::make_shared<std::string>();
    auto carrier = std::make_shared<std::string>("q");
    auto sets = std::make_shared<std::vector<std::string>>();
    cmd->add_option("expr", *expr, "expression")->required();
    cmd->add_option("--carrier", *carrier, "carrier: q or fp:<prime> (default q)");
    cmd->add_option("--set", *sets, "variable binding var=value (value: rational or bot)");
    cmd->callback([=, &run] {
      run = [=] {
        CarrierSpec c = CarrierSpec::from_string(*carrier);
        Valuation val;
        for (const std::string& s : *sets) {
          auto eq = s.find('=');
          if (eq == std::string::npos) throw DomainError("--set expects var=value, got '" + s + "'");
          std::string var = s.substr(0, eq), value = s.substr(eq + 1);
          val.insert_or_assign(var, value == "bot" ? MeadowValue::bot()
                                                   : MeadowValue::elem(parse_rational(value)));
        }
        std::cout << eval(parse(*expr), val, c).to_string() << "\n";
        return 0;
      };
    });
  }

  // normalize
  {
    auto* cmd = app.add_subcommand("normalize", "reduce a division-free term to bot or its "
                                                "quasi-polynomial normal form");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "division-free expression")->required();
    cmd->callback([expr, &run] {
      run = [expr] {
        QuasiPoly q = reduce_wcr(parse(*expr));
        std::cout << print(quasipoly_to_term(q)) << "\n";
        return 0;
      };
    });
  }

  // flatten
  {
    auto* cmd = app.add_subcommand("flatten", "rewrite a term into a single fraction of "
                                              "division- and bot-free terms");
    auto expr = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    cmd->add_option("expr", *expr, "expression")->required();
    cmd->add_flag("--trace", *trace, "print every axiom application");
    cmd->callback([=, &run] {
      run = [=] {
        auto [frac, steps] = flatten(parse(*expr));
        std::cout << fracterm_to_string(frac) << "\n";
        if (*trace)
          for (const auto& st : steps)
            std::cout << st.rule.name << " at " << path_to_string(st.pos) << " "
                      << subst_to_string(st.subst) << "\n";
        return 0;
      };
    });
  }

  // decide
  {
    auto* cmd = app.add_subcommand("decide", "decide whether an equation holds in every "
                                             "common meadow");
    auto eq = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto explain = std::make_shared<bool>(false);
    auto no_search = std::make_shared<bool>(false);
    auto budget = std::make_shared<long>(2000);
    auto max_vars = std::make_shared<int>(4);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("equation", *eq, "equation lhs = rhs");
    cmd->add_option("--file", *file, "file with one equation per line ('#' comments)");
    cmd->add_flag("--explain", *explain, "print the condition ledger as comments");
    cmd->add_flag("--no-search", *no_search, "skip the countermodel search");
    cmd->add_option("--budget", *budget, "countermodel search samples (default 2000)");
    cmd->add_option("--max-vars", *max_vars, "exhaustive-search variable bound (default 4)");
    cmd->add_option("--seed", *seed, "search seed (default 1)");
    cmd->callback([=, &run] {
      run = [=] {
        SearchBudget b;
        b.samples = *budget;
        b.max_vars = *max_vars;
        b.seed = *seed;
        std::vector<Equation> eqs;
        if (!file->empty()) {
          std::ifstream in(*file);
          if (!in) throw DomainError("cannot open '" + *file + "'");
          eqs = parse_equation_file(in);
        } else if (!eq->empty()) {
          eqs.push_back(parse_equation(*eq));
        } else {
          throw DomainError("decide needs an equation or --file");
        }
        int status = 0;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
          if (eqs.size() > 1) std::cout << "# " << print(eqs[i]) << "\n";
          Verdict v = decide(eqs[i], b, !*no_search);
          if (*explain)
            for (const auto& r : v.reasons) std::cout << "# " << r << "\n";
          std::cout << format_verdict(v);
          if (eqs.size() > 1 && i + 1 < eqs.size()) std::cout << "\n";
          if (!v.valid) status = 1;
        }
        return status;
      };
    });
  }

  // fuzz
  {
    auto* cmd = app.add_subcommand("fuzz", "differential campaign: decide vs the semantic "
                                           "oracle battery on random equations");
    auto samples = std::make_shared<int>(500);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto max_vars = std::make_shared<int>(3);
    auto depth = std::make_shared<int>(6);
    auto signature = std::make_shared<std::string>("cm");
    cmd->add_option("--samples", *samples, "number of random equations (default 500)");
    cmd->add_option("--seed", *seed, "base seed (default 0)");
    cmd->add_option("--max-vars", *max_vars, "variables drawn from x,y,z,w (default 3)");
    cmd->add_option("--depth", *depth, "maximum term depth (default 6)");
    cmd->add_option("--signature", *signature, "ring, ringbot, meadow or cm (default cm)");
    cmd->callback([=, &run] {
      run = [=] {
        GenConfig cfg;
        cfg.seed = *seed;
        cfg.max_vars = *max_vars;
        cfg.max_depth = *depth;
        cfg.signature = parse_signature(*signature);
        DiffReport rep = differential_run(*samples, cfg);
        for (const auto& line : rep.lines()) std::cout << line << "\n";
        return rep.clean() ? 0 : 1;
      };
    });
  }

  // axioms
  {
    auto* cmd = app.add_subcommand("axioms", "soundness report for the 18 axioms");
    auto samples = std::make_shared<long>(1000);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("--samples", *samples, "rational samples per axiom (default 1000)");
    cmd->add_option("--seed", *seed, "sampling seed (default 1)");
    cmd->callback([=, &run] {
      run = [=] {
        SoundnessReport rep = soundness_suite(*seed, *samples);
        for (const auto& line : rep.lines()) std::cout << line << "\n";
        return rep.all_pass ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const meadow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

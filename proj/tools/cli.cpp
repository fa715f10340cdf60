#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "biheyt/biheyt.hpp"

namespace biheyt::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw Error(ErrorKind::InvalidArgument, "bad " + what + " '" + text + "'");
  return value;
}

// chainN | FILE, joined by '*' for products.
BiHeytingAlgebra algebra_from_spec(const std::string& spec) {
  const auto star = spec.find('*');
  if (star != std::string::npos)
    return product(algebra_from_spec(spec.substr(0, star)), algebra_from_spec(spec.substr(star + 1)));
  if (spec.rfind("chain", 0) == 0 && spec.size() > 5 && spec.find_first_not_of("0123456789", 5) == std::string::npos)
    return chain_algebra(parse_count(spec.substr(5), "chain length"));
  return algebra_from_json(read_json(spec));
}

// Accepts "chain3", or "chain" "3" as two tokens, or file paths.
std::vector<BiHeytingAlgebra> algebras_from_specs(const std::vector<std::string>& tokens) {
  std::vector<BiHeytingAlgebra> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "chain" && i + 1 < tokens.size()) {
      out.push_back(chain_algebra(parse_count(tokens[++i], "chain length")));
      continue;
    }
    out.push_back(algebra_from_spec(tokens[i]));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "no algebra given");
  return out;
}

struct RuleSource {
  std::string file;
  std::string text;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--rule", file, "Rule file (text grammar or JSON)");
    auto* t = cmd->add_option("--rule-text", text, "Rule in the text grammar");
    f->excludes(t);
  }
  Rule load() const {
    if (!file.empty()) return rule_from_text(read_file(file));
    if (!text.empty()) return rule_from_text(text);
    throw Error(ErrorKind::InvalidArgument, "one of --rule or --rule-text is required");
  }
};

Json assignment_json(const BiHeytingAlgebra& a, const Assignment& asg) {
  Json values = Json::array(), labels = Json::array();
  for (Element e : asg) {
    values.push_back(e);
    labels.push_back(a.label(e));
  }
  return {{"values", values}, {"labels", labels}};
}

class Output {
 public:
  Output(std::ostream& out) : out_(out) {}
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    file << text;
  }
  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

 private:
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite bi-Heyting algebra workbench"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();
  Output output(out);
  bool verbose = false;
  app.add_option("--out", output.path, "Write the result to this file instead of stdout");
  app.add_flag("--verbose", verbose, "Progress messages on stderr");

  int status = kSuccess;
  std::function<void()> action;
  auto log = [&](const std::string& msg) {
    if (verbose) err << msg << "\n";
  };

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Dual poset (join-irreducibles, reversed order) of an algebra");
  std::string dual_algebra;
  std::size_t dual_chain = 0;
  bool dual_dot = false;
  auto* dual_alg_opt = dual_cmd->add_option("--algebra", dual_algebra, "Algebra: JSON file, chainN, or A*B");
  auto* dual_chain_opt = dual_cmd->add_option("--chain", dual_chain, "Use the N-element chain");
  dual_alg_opt->excludes(dual_chain_opt);
  dual_cmd->add_flag("--dot", dual_dot, "Emit the Hasse diagram in DOT instead of JSON");
  dual_cmd->callback([&] {
    action = [&] {
      if (!dual_chain_opt->count() && dual_algebra.empty())
        throw Error(ErrorKind::InvalidArgument, "one of --algebra or --chain is required");
      const BiHeytingAlgebra a = dual_chain_opt->count() ? chain_algebra(dual_chain) : algebra_from_spec(dual_algebra);
      const Poset p = dual_poset(a);
      if (dual_dot) output.emit(hasse_dot(p));
      else output.emit(Json{{"poset", poset_to_json(p)}, {"join_irreducibles", join_irreducibles(a)}});
    };
  });

  // updual
  auto* updual_cmd = app.add_subcommand("updual", "Algebra of up-sets of a poset");
  std::string updual_poset;
  std::size_t updual_chain = 0;
  auto* updual_poset_opt = updual_cmd->add_option("--poset", updual_poset, "Poset JSON file");
  auto* updual_chain_opt = updual_cmd->add_option("--chain", updual_chain, "Use the N-element chain poset");
  updual_poset_opt->excludes(updual_chain_opt);
  updual_cmd->callback([&] {
    action = [&] {
      Poset p;
      if (updual_chain_opt->count()) p = chain_poset(updual_chain);
      else if (!updual_poset.empty()) p = poset_from_json(read_json(updual_poset));
      else throw Error(ErrorKind::InvalidArgument, "one of --poset or --chain is required");
      output.emit(algebra_to_json(upset_algebra(p)));
    };
  });

  // free
  auto* free_cmd = app.add_subcommand("free", "Free algebra over the variety generated by the given algebras");
  std::vector<std::string> free_gens;
  std::size_t free_vars = 0;
  free_cmd->add_option("--gen", free_gens, "Generating algebras (chainN, JSON file, A*B)")->required();
  free_cmd->add_option("--vars", free_vars, "Number of free generators")->required();
  free_cmd->callback([&] {
    action = [&] {
      const auto gens = algebras_from_specs(free_gens);
      log("building free algebra on " + std::to_string(free_vars) + " generators");
      output.emit(free_algebra_to_json(free_algebra(gens, free_vars, Budget::from_env())));
    };
  });

  // check-rule
  auto* check_cmd = app.add_subcommand("check-rule", "Validity of a rule on an algebra or a family");
  RuleSource check_rule;
  check_rule.add_to(check_cmd);
  std::vector<std::string> check_on;
  check_cmd->add_option("--on", check_on, "chainN | FILE | A*B | enum-products-with-2 BOUND")
      ->required()
      ->expected(1, 2);
  check_cmd->callback([&] {
    action = [&] {
      const Rule r = check_rule.load();
      const Budget budget = Budget::from_env();
      Json result{{"rule", to_string(r)}};
      if (check_on.front() == "enum-products-with-2") {
        if (check_on.size() != 2) throw Error(ErrorKind::InvalidArgument, "enum-products-with-2 needs a BOUND");
        const auto family = upset_algebras_times_two(parse_count(check_on[1], "bound"));
        log("checking " + std::to_string(family.size()) + " algebras");
        const BatchCheck c = valid_in_all(family, r, budget);
        result["holds"] = c.holds;
        result["algebras_checked"] = family.size();
        if (!c.holds) {
          result["failing_index"] = *c.failing_index;
          result["counter"] = assignment_json(family[*c.failing_index], *c.counter);
        }
        status = c.holds ? kSuccess : kCheckFailed;
      } else {
        const auto algebras = algebras_from_specs(check_on);
        const BatchCheck c = valid_in_all(algebras, r, budget);
        result["holds"] = c.holds;
        if (!c.holds) {
          if (algebras.size() > 1) result["failing_index"] = *c.failing_index;
          result["counter"] = assignment_json(algebras[*c.failing_index], *c.counter);
        }
        status = c.holds ? kSuccess : kCheckFailed;
      }
      output.emit(result);
    };
  });

  // admissible
  auto* adm_cmd = app.add_subcommand("admissible", "Rule validity on free algebras F(1)..F(N)");
  RuleSource adm_rule;
  adm_rule.add_to(adm_cmd);
  std::vector<std::string> adm_gens;
  std::size_t adm_max = 1;
  adm_cmd->add_option("--gen", adm_gens, "Generating algebras")->required();
  adm_cmd->add_option("--max-vars", adm_max, "Largest number of free generators")->required();
  adm_cmd->callback([&] {
    action = [&] {
      const Rule r = adm_rule.load();
      const auto gens = algebras_from_specs(adm_gens);
      const AdmissibilityEvidence ev = admissible_up_to(gens, r, adm_max, Budget::from_env());
      Json result{{"rule", to_string(r)}, {"verdicts", ev.verdicts}, {"truncated", ev.truncated}};
      if (ev.truncated) result["truncation_reason"] = ev.truncation_reason;
      if (ev.refuted_at) {
        result["refuted_at"] = *ev.refuted_at;
        result["counter"] = *ev.counter;
        result["evidence"] = "refuted";
        status = kCheckFailed;
      } else if (ev.truncated) {
        result["evidence"] = "inconclusive";
        status = kInconclusive;
      } else {
        result["evidence"] = "bounded";
      }
      output.emit(result);
    };
  });

  // derivable
  auto* der_cmd = app.add_subcommand("derivable", "Search V(gen) for a counterexample to a rule");
  RuleSource der_rule;
  der_rule.add_to(der_cmd);
  std::vector<std::string> der_gen;
  std::size_t der_bound = 1;
  der_cmd->add_option("--gen", der_gen, "Generating algebra")->required();
  der_cmd->add_option("--power-bound", der_bound, "Largest power of the generator searched")->required();
  der_cmd->callback([&] {
    action = [&] {
      const Rule r = der_rule.load();
      const auto gens = algebras_from_specs(der_gen);
      if (gens.size() != 1) throw Error(ErrorKind::InvalidArgument, "derivable takes exactly one --gen");
      const auto cex = variety_counterexample(gens.front(), r, der_bound, Budget::from_env());
      Json result{{"rule", to_string(r)}, {"power_bound", der_bound}};
      if (cex) {
        result["counterexample"] = {{"power", cex->power},
                                    {"subuniverse", members(cex->subuniverse)},
                                    {"congruence", congruence_to_json(cex->congruence)},
                                    {"algebra", algebra_to_json(cex->algebra)},
                                    {"assignment", assignment_json(cex->algebra, cex->assignment)}};
        status = kCheckFailed;
      } else {
        result["counterexample"] = nullptr;
      }
      output.emit(result);
    };
  });

  // embed / iso / si
  auto* embed_cmd = app.add_subcommand("embed", "All embeddings of one algebra into another");
  std::string embed_from, embed_into;
  embed_cmd->add_option("--from", embed_from, "Source algebra")->required();
  embed_cmd->add_option("--into", embed_into, "Target algebra")->required();
  embed_cmd->callback([&] {
    action = [&] {
      const auto found = embeddings(algebra_from_spec(embed_from), algebra_from_spec(embed_into), Budget::from_env());
      Json maps = Json::array();
      for (const auto& m : found) maps.push_back(m.map);
      output.emit(Json{{"count", found.size()}, {"embeddings", maps}});
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test between two algebras");
  std::string iso_a, iso_b;
  iso_cmd->add_option("a", iso_a, "First algebra")->required();
  iso_cmd->add_option("b", iso_b, "Second algebra")->required();
  iso_cmd->callback([&] {
    action = [&] {
      const auto iso = is_isomorphic(algebra_from_spec(iso_a), algebra_from_spec(iso_b), Budget::from_env());
      Json result{{"isomorphic", iso.has_value()}};
      if (iso) result["map"] = iso->map;
      status = iso ? kSuccess : kCheckFailed;
      output.emit(result);
    };
  });

  auto* si_cmd = app.add_subcommand("si", "Subdirect irreducibility and monolith");
  std::string si_algebra;
  si_cmd->add_option("algebra", si_algebra, "Algebra")->required();
  si_cmd->callback([&] {
    action = [&] {
      const auto res = is_subdirectly_irreducible(algebra_from_spec(si_algebra));
      Json result{{"irreducible", res.irreducible}};
      if (res.monolith) result["monolith"] = congruence_to_json(*res.monolith);
      output.emit(result);
    };
  });

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the claim battery C1-C10");
  std::string verify_config;
  std::vector<std::string> verify_only;
  bool no_timing = false;
  verify_cmd->add_option("--config", verify_config, "Battery config JSON");
  verify_cmd->add_option("--only", verify_only, "Run only these check ids")->delimiter(',');
  verify_cmd->add_flag("--no-timing", no_timing, "Write ms = 0 for reproducible output");
  verify_cmd->callback([&] {
    action = [&] {
      BatteryConfig cfg;
      cfg.budget = Budget::from_env();
      if (!verify_config.empty()) {
        cfg = BatteryConfig::from_json(read_json(verify_config));
      }
      if (no_timing) cfg.timing = false;
      if (!verify_only.empty()) cfg.only = verify_only;
      const VerificationReport report = run_battery(cfg);
      if (verbose)
        for (const auto& c : report.checks) err << c.id << " " << to_string(c.verdict) << " (" << c.ms << " ms)\n";
      output.emit(report.to_json());
      status = report.overall ? kSuccess : report.any_failed() ? kCheckFailed : kInconclusive;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (action) action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}

}  // namespace biheyt::cli

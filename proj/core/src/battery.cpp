#include "biheyt/battery.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "biheyt/duality.hpp"
#include "biheyt/error.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/morphisms.hpp"
#include "biheyt/rules.hpp"

namespace biheyt {

namespace {

CheckOutcome verdict_if(bool ok, Json witness) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(witness)}; }

BiHeytingAlgebra three() { return chain_algebra(3); }
BiHeytingAlgebra two() { return chain_algebra(2); }

FreeAlgebra free_over_three(std::size_t n, const Budget& budget) {
  const std::vector<BiHeytingAlgebra> gens{three()};
  return free_algebra(gens, n, budget);
}

Poset chain_and_two_points() { return disjoint_union(disjoint_union(chain_poset(2), Poset(1)), Poset(1)); }

std::vector<Poset> posets_up_to(std::size_t bound, const Budget& budget) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= bound; ++n)
    for (Poset& p : enumerate_posets(n, budget.max_poset_size)) out.push_back(std::move(p));
  return out;
}

CheckOutcome check_free_algebra(const BatteryConfig& cfg) {
  const FreeAlgebra f = free_over_three(1, cfg.budget);
  const BiHeytingAlgebra target = product(product(three(), two()), two());
  const auto iso = is_isomorphic(f.algebra, target, cfg.budget);
  Json w{{"size", f.algebra.size()}, {"generators", f.generators}};
  if (iso) w["isomorphism"] = iso->map;
  return verdict_if(f.algebra.size() == 12 && iso.has_value(), std::move(w));
}

CheckOutcome check_free_dual(const BatteryConfig& cfg) {
  const FreeAlgebra f = free_over_three(1, cfg.budget);
  const Poset dual = dual_poset(f.algebra);
  const auto bijection = poset_isomorphic(dual, chain_and_two_points());
  Json w{{"dual", poset_to_json(dual)}};
  if (bijection) w["bijection"] = *bijection;
  return verdict_if(bijection.has_value(), std::move(w));
}

CheckOutcome check_rule_on_products(const BatteryConfig& cfg) {
  const Rule r = middle_element_rule();
  const BiHeytingAlgebra t = three();
  const RuleCheck on_three = rule_holds(t, r, cfg.budget);
  const bool refuted_at_middle = !on_three.holds && on_three.counter == Assignment{1};

  std::vector<BiHeytingAlgebra> family;
  for (const Poset& p : posets_up_to(cfg.poset_bound, cfg.budget)) family.push_back(product(upset_algebra(p), two()));
  const BatchCheck batch = valid_in_all(family, r, cfg.budget);

  Json w{{"rule", to_string(r)}, {"holds_on_3", on_three.holds}, {"products_checked", family.size()},
         {"holds_on_products", batch.holds}};
  if (on_three.counter) w["counter_on_3"] = *on_three.counter;
  if (batch.failing_index) {
    w["failing_product"] = *batch.failing_index;
    w["failing_assignment"] = *batch.counter;
  }
  return verdict_if(refuted_at_middle && batch.holds, std::move(w));
}

CheckOutcome check_admissibility(const BatteryConfig& cfg) {
  const std::vector<BiHeytingAlgebra> gens{three()};
  const AdmissibilityEvidence ev = admissible_up_to(gens, middle_element_rule(), cfg.admissibility_bound, cfg.budget);
  Json w{{"verdicts", ev.verdicts}, {"bound", cfg.admissibility_bound}};
  if (ev.truncated) {
    w["truncated"] = ev.truncation_reason;
    // A refutation before the cut is still a refutation.
    if (!ev.refuted_at) return {Verdict::Inconclusive, std::move(w)};
  }
  if (ev.refuted_at) {
    w["refuted_at"] = *ev.refuted_at;
    w["counter"] = *ev.counter;
  }
  const bool all_true = std::all_of(ev.verdicts.begin(), ev.verdicts.end(), [](bool b) { return b; });
  return verdict_if(all_true && ev.verdicts.size() == cfg.admissibility_bound, std::move(w));
}

CheckOutcome check_embedding_failure(const BatteryConfig& cfg) {
  const BiHeytingAlgebra t = three();
  std::size_t checked = 0;
  for (const Poset& p : posets_up_to(cfg.poset_bound, cfg.budget)) {
    const BiHeytingAlgebra target = product(upset_algebra(p), two());
    const auto found = embeddings(t, target, cfg.budget);
    ++checked;
    if (!found.empty())
      return verdict_if(false, {{"poset", poset_to_json(p)}, {"embedding", found.front().map}});
  }
  return verdict_if(true, {{"products_checked", checked}});
}

Json si_summary(const std::vector<BiHeytingAlgebra>& sis) {
  Json out = Json::array();
  for (const auto& a : sis) out.push_back({{"size", a.size()}, {"chain", is_chain(a)}});
  return out;
}

// Every listed algebra is isomorphic to exactly one of `expected` and vice versa.
bool same_types(const std::vector<BiHeytingAlgebra>& found, const std::vector<BiHeytingAlgebra>& expected,
                const Budget& budget) {
  if (found.size() != expected.size()) return false;
  for (const auto& e : expected)
    if (std::none_of(found.begin(), found.end(), [&](const auto& f) { return is_isomorphic(f, e, budget).has_value(); }))
      return false;
  return true;
}

CheckOutcome check_var3_sis(const BatteryConfig& cfg) {
  const auto sis = si_sections(three(), cfg.budget);
  const bool exact = same_types(sis, {two(), three()}, cfg.budget);
  const auto prod_si = is_subdirectly_irreducible(product(three(), two()));
  return verdict_if(exact && !prod_si.irreducible,
                    {{"si_sections_of_3", si_summary(sis)}, {"3x2_irreducible", prod_si.irreducible}});
}

CheckOutcome check_power_membership(const BatteryConfig& cfg) {
  const FreeAlgebra f = free_over_three(1, cfg.budget);
  Json w = Json::object();
  bool ok = true;
  for (std::size_t d : {3u, 2u}) {
    const BiHeytingAlgebra b = product(chain_algebra(d), f.algebra);
    const PowerMembership m = embeds_in_power(b, f.algebra, cfg.budget);
    Json entry{{"member", m.member}, {"homomorphisms", m.homomorphisms.size()}};
    if (m.member) {
      std::set<std::size_t> used;
      for (const auto& s : m.certificate) used.insert(s.hom);
      entry["pairs_separated"] = m.certificate.size();
      entry["separating_homomorphisms"] = std::vector<std::size_t>(used.begin(), used.end());
      const auto tuples = power_embedding(b, m);
      entry["injective"] = std::set<std::vector<Element>>(tuples.begin(), tuples.end()).size() == tuples.size();
      ok = ok && entry["injective"].get<bool>();
    } else if (m.unseparated) {
      entry["unseparated"] = {m.unseparated->first, m.unseparated->second};
    }
    ok = ok && m.member;
    w[std::to_string(d) + "xF1"] = std::move(entry);
  }
  return verdict_if(ok, std::move(w));
}

CheckOutcome check_lin_sis(const BatteryConfig& cfg) {
  Json w = Json::object();
  bool ok = true;
  for (std::size_t n = 2; n <= cfg.lin_bound; ++n) {
    const auto sis = si_sections(chain_algebra(n), cfg.budget);
    std::vector<BiHeytingAlgebra> chains;
    for (std::size_t k = 2; k <= n; ++k) chains.push_back(chain_algebra(k));
    const bool exact = same_types(sis, chains, cfg.budget);
    ok = ok && exact;
    w[std::to_string(n)] = si_summary(sis);
  }
  return verdict_if(ok, std::move(w));
}

CheckOutcome check_positive_existential(const BatteryConfig& cfg) {
  const Rule r = middle_element_rule();
  const auto on_three = pos_existential_holds(three(), r.premises, 1, cfg.budget);
  const auto on_product = pos_existential_holds(product(three(), two()), r.premises, 1, cfg.budget);
  Json w{{"holds_on_3", on_three.holds}, {"holds_on_3x2", on_product.holds}};
  if (on_three.witness) w["witness_on_3"] = *on_three.witness;
  return verdict_if(on_three.holds && !on_product.holds, std::move(w));
}

CheckOutcome check_unique_cover(const BatteryConfig& cfg) {
  const BiHeytingAlgebra t = three();
  std::size_t non_boolean = 0;
  for (const Poset& p : posets_up_to(cfg.poset_bound, cfg.budget)) {
    const BiHeytingAlgebra up = upset_algebra(p);
    if (is_boolean(up)) continue;
    ++non_boolean;
    if (!find_section(up, t, cfg.budget)) return verdict_if(false, {{"no_section_in", poset_to_json(p)}});
  }
  return verdict_if(true, {{"non_boolean_checked", non_boolean}});
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "fail";
}

BatteryConfig BatteryConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "battery config must be a JSON object");
  BatteryConfig cfg;
  auto count = [&](const std::string& key) {
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw Error(ErrorKind::Parse, "'" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "poset_bound") cfg.poset_bound = count(key);
    else if (key == "admissibility_bound") cfg.admissibility_bound = count(key);
    else if (key == "lin_bound") cfg.lin_bound = count(key);
    else if (key == "free_budget") cfg.budget.free_ambient = count(key);
    else if (key == "search_budget") cfg.budget.search_nodes = count(key);
    else if (key == "assignment_budget") cfg.budget.assignments = count(key);
    else if (key == "max_carrier") cfg.budget.max_carrier = count(key);
    else if (key == "timing") {
      if (!value.is_boolean()) throw Error(ErrorKind::Parse, "'timing' must be a boolean");
      cfg.timing = value.get<bool>();
    } else if (key == "checks") {
      if (!value.is_array()) throw Error(ErrorKind::Parse, "'checks' must be an array of ids");
      cfg.only = value.get<std::vector<std::string>>();
    } else {
      throw Error(ErrorKind::Parse, "unknown battery config key '" + key + "'");
    }
  }
  return cfg;
}

bool VerificationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::Fail; });
}

bool VerificationReport::any_inconclusive() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::Inconclusive; });
}

Json VerificationReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back({{"id", c.id},
                    {"desc", c.desc},
                    {"anchor", c.anchor},
                    {"verdict", to_string(c.verdict)},
                    {"witness", c.witness},
                    {"ms", c.ms}});
  return {{"checks", list}, {"overall", overall ? "pass" : "fail"}};
}

const std::vector<RegisteredCheck>& registered_checks() {
  static const std::vector<RegisteredCheck> checks{
      {"C1", "free algebra on one generator over 3 has 12 elements and is isomorphic to 3x2x2",
       "F(1) of Var(3) is 3x2x2", check_free_algebra},
      {"C2", "dual poset of F(1) is a 2-chain plus two isolated points", "dual of F(1) is 2-chain + 2 points",
       check_free_dual},
      {"C3", "rule !x=0; ~x=1 |- 0=1 fails on 3 at the middle and holds on Up(P)x2 for small P",
       "rule holds on every B x 2 but not on 3", check_rule_on_products},
      {"C4", "the rule holds on the free algebras F(1), F(2) of Var(3)", "rule admissible in Var(3)",
       check_admissibility},
      {"C5", "3 has no embedding into Up(P)x2 for small P", "3 does not embed into H x 2", check_embedding_failure},
      {"C6", "SI members of HS(3) are exactly 2 and 3; 3x2 is not SI", "SIs of Var(3) are 2 and 3",
       check_var3_sis},
      {"C7", "3xF(1) and 2xF(1) embed into powers of F(1)", "D x F(1) lies in Q(F(omega)) for SI D",
       check_power_membership},
      {"C8", "SI members of HS(chain n) are the chains 2..n", "SIs of linear bi-Heyting algebras are chains",
       check_lin_sis},
      {"C9", "exists x (!x=0 & ~x=1) holds on 3 and fails on 3x2",
       "3 and 3x2 differ in positive existential theory", check_positive_existential},
      {"C10", "3 is a quotient of a subalgebra of every non-Boolean Up(P) for small P",
       "Var(3) covers the Boolean algebras", check_unique_cover},
  };
  return checks;
}

VerificationReport run_battery(const BatteryConfig& config) {
  VerificationReport report;
  for (const RegisteredCheck& check : registered_checks()) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), check.id) == config.only.end())
      continue;
    CheckResult result{check.id, check.desc, check.anchor, Verdict::Fail, Json::object(), 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      CheckOutcome outcome = check.run(config);
      result.verdict = outcome.verdict;
      result.witness = std::move(outcome.witness);
    } catch (const BudgetExceeded& e) {
      result.verdict = Verdict::Inconclusive;
      result.witness = {{"reason", e.what()}};
    } catch (const Error& e) {
      result.verdict = Verdict::Fail;
      result.witness = {{"error", e.what()}};
    }
    if (config.timing)
      result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
    report.checks.push_back(std::move(result));
  }
  for (const auto& id : config.only)
    if (std::none_of(registered_checks().begin(), registered_checks().end(),
                     [&](const RegisteredCheck& c) { return c.id == id; }))
      throw Error(ErrorKind::InvalidArgument, "unknown check id '" + id + "'");
  report.overall = !report.checks.empty() && !report.any_failed() && !report.any_inconclusive();
  return report;
}

}  // namespace biheyt

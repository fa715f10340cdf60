#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "biheyt/budget.hpp"
#include "biheyt/io.hpp"

namespace biheyt {

struct BatteryConfig {
  // Posets P with |P| <= poset_bound make up the B x 2 and non-Boolean
  // families (C3, C5, C10).
  std::size_t poset_bound = 4;
  // Free algebras F(1)..F(admissibility_bound) checked for C4.
  std::size_t admissibility_bound = 2;
  // Chains 2..lin_bound checked for C8.
  std::size_t lin_bound = 5;
  Budget budget;
  // Record wall time per check; off gives byte-identical reports.
  bool timing = true;
  // Check ids to run; empty runs all of them.
  std::vector<std::string> only;

  // Keys: poset_bound, admissibility_bound, lin_bound, free_budget,
  // search_budget, assignment_budget, max_carrier, timing, checks.
  // Unknown keys are rejected with Error(Parse).
  static BatteryConfig from_json(const Json& j);
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct CheckResult {
  std::string id;
  std::string desc;
  std::string anchor;
  Verdict verdict = Verdict::Fail;
  Json witness;
  std::int64_t ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;

  bool any_failed() const;
  bool any_inconclusive() const;
  // {"checks": [{"id", "desc", "anchor", "verdict", "witness", "ms"}], "overall": "pass"|"fail"}
  Json to_json() const;
};

struct CheckOutcome {
  Verdict verdict;
  Json witness;
};

struct RegisteredCheck {
  std::string id;
  std::string desc;
  std::string anchor;
  std::function<CheckOutcome(const BatteryConfig&)> run;
};

// C1..C10, in id order.
const std::vector<RegisteredCheck>& registered_checks();

// Runs the selected checks in id order. A check that runs out of budget is
// inconclusive; any other library error counts as a failure. overall is true
// only when every selected check passes.
VerificationReport run_battery(const BatteryConfig& config = {});

}  // namespace biheyt

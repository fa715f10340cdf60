#include <doctest.h>

#include <set>

#include "biheyt/battery.hpp"
#include "biheyt/error.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/rules.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biheyt;

namespace {

const VerificationReport& default_report() {
  static const VerificationReport report = [] {
    BatteryConfig cfg;
    cfg.timing = false;
    return run_battery(cfg);
  }();
  return report;
}

const CheckResult& find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::out_of_range(id);
}

}  // namespace

TEST_SUITE("battery") {

TEST_CASE("registry lists each check once") {
  std::set<std::string> ids;
  for (const auto& c : registered_checks()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.desc.empty());
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(ids.size() == 10);
  for (int i = 1; i <= 10; ++i) CHECK(ids.count("C" + std::to_string(i)) == 1);
}

TEST_CASE("default configuration passes") {
  const auto& r = default_report();
  CHECK(r.overall);
  CHECK(r.checks.size() == 10);
  for (const auto& c : r.checks) {
    CAPTURE(c.id);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(c.ms == 0);
  }
  CHECK_FALSE(r.any_failed());
  CHECK_FALSE(r.any_inconclusive());
  const Json j = r.to_json();
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("checks").size() == 10);
}

TEST_CASE("reports are reproducible with timing off") {
  BatteryConfig cfg;
  cfg.timing = false;
  cfg.only = {"C1", "C2", "C3", "C6", "C9"};
  const std::string first = run_battery(cfg).to_json().dump();
  const std::string second = run_battery(cfg).to_json().dump();
  CHECK(first == second);
}

TEST_CASE("witnesses re-validate") {
  const auto& r = default_report();

  const Json& c1 = find(r, "C1").witness;
  const std::vector<BiHeytingAlgebra> g{fixture::three()};
  const auto f = free_algebra(g, 1);
  const auto target = product(product(fixture::three(), fixture::two()), fixture::two());
  CHECK(c1.at("size") == 12);
  CHECK(oracle::preserves_everything(f.algebra, target, c1.at("isomorphism").get<std::vector<Element>>()));

  const Json& c2 = find(r, "C2").witness;
  const Poset dual = poset_from_json(c2.at("dual"));
  const auto bij = c2.at("bijection").get<std::vector<Element>>();
  const Poset expected = fixture::chain_and_two_points();
  for (Element i = 0; i < dual.size(); ++i)
    for (Element j = 0; j < dual.size(); ++j) CHECK(dual.leq(i, j) == expected.leq(bij[i], bij[j]));

  const Json& c3 = find(r, "C3").witness;
  const Rule rule = middle_element_rule();
  const auto counter = c3.at("counter_on_3").get<Assignment>();
  const oracle::OrderOnly three{fixture::three()};
  for (const auto& p : rule.premises) CHECK(three.eval(p.left, counter) == three.eval(p.right, counter));
  CHECK(three.eval(rule.conclusion.left, counter) != three.eval(rule.conclusion.right, counter));
  CHECK(c3.at("products_checked") == 24);

  CHECK(find(r, "C4").witness.at("verdicts") == Json::parse("[true,true]"));

  const auto w9 = find(r, "C9").witness.at("witness_on_3").get<Assignment>();
  for (const auto& p : rule.premises) CHECK(three.eval(p.left, w9) == three.eval(p.right, w9));
}

TEST_CASE("smaller poset bound still passes") {
  BatteryConfig cfg;
  cfg.poset_bound = 1;
  cfg.only = {"C3", "C5"};
  const auto r = run_battery(cfg);
  CHECK(r.overall);
  CHECK(r.checks.size() == 2);
  CHECK(find(r, "C3").witness.at("products_checked") == 1);
}

TEST_CASE("exhausted free budget is inconclusive") {
  BatteryConfig cfg;
  cfg.budget.free_ambient = 0;
  cfg.only = {"C1"};
  const auto r = run_battery(cfg);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].verdict == Verdict::Inconclusive);
  CHECK_FALSE(r.overall);
  CHECK(r.any_inconclusive());
  CHECK(r.to_json().at("overall") == "fail");
}

TEST_CASE("configuration parsing") {
  const auto cfg = BatteryConfig::from_json(
      Json::parse(R"({"poset_bound":2,"admissibility_bound":1,"free_budget":1000,"timing":false,"checks":["C2"]})"));
  CHECK(cfg.poset_bound == 2);
  CHECK(cfg.admissibility_bound == 1);
  CHECK(cfg.budget.free_ambient == 1000);
  CHECK_FALSE(cfg.timing);
  CHECK(cfg.only == std::vector<std::string>{"C2"});
  CHECK_THROWS_AS(BatteryConfig::from_json(Json::parse(R"({"bogus":1})")), Error);
  BatteryConfig unknown;
  unknown.only = {"C99"};
  CHECK_THROWS_AS(run_battery(unknown), Error);
}

}

#include <doctest.h>

#include <random>

#include "biheyt/error.hpp"
#include "biheyt/rules.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biheyt;

namespace {

Term random_term(std::mt19937& rng, int depth, unsigned vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  const int k = pick(rng);
  if (k == 0 || (k <= 2 && rng() % 3 != 0)) return Term::variable(std::uniform_int_distribution<unsigned>(1, vars)(rng));
  switch (k) {
    case 1: return Term::zero();
    case 2: return Term::one();
    case 3: return Term::meet(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 4: return Term::join(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 5: return Term::imp(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 6: return Term::coimp(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 7: return Term::neg(random_term(rng, depth - 1, vars));
    default: return Term::coneg(random_term(rng, depth - 1, vars));
  }
}

Equation random_equation(std::mt19937& rng, unsigned vars) {
  return {random_term(rng, 2, vars), random_term(rng, 2, vars)};
}

std::vector<BiHeytingAlgebra> up_to_eight() {
  std::vector<BiHeytingAlgebra> out;
  for (auto& a : fixture::zoo())
    if (a.size() <= 8) out.push_back(std::move(a));
  return out;
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("evaluation") {
  const auto three = fixture::three();
  const std::vector<Element> middle{1};
  CHECK(eval_term(three, parse_term("!x1"), middle) == three.bot());
  CHECK(eval_term(three, parse_term("~x1"), middle) == three.top());
  for (Element x = 0; x < 3; ++x) CHECK(eval_term(three, Term::one(), std::vector<Element>{x}) == three.top());
  CHECK_THROWS_AS(eval_term(three, parse_term("x2"), middle), Error);
  try {
    (void)eval_term(three, parse_term("x2"), middle);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
  CHECK(satisfies(three, parse_equation("x1 & !x1 = 0"), middle));
  CHECK_FALSE(satisfies(three, parse_equation("x1 | !x1 = 1"), middle));
}

TEST_CASE("negations are sugar") {
  std::mt19937 rng(7);
  for (const auto& a : up_to_eight())
    for (int i = 0; i < 20; ++i) {
      const Term t = random_term(rng, 3, 2);
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) {
          const std::vector<Element> asg{x, y};
          const Element v = eval_term(a, t, asg);
          CHECK(eval_term(a, Term::neg(t), asg) == a.imp(v, a.bot()));
          CHECK(eval_term(a, Term::coneg(t), asg) == a.coimp(a.top(), v));
        }
    }
}

TEST_CASE("the middle-element rule") {
  const Rule r = middle_element_rule();
  const auto on_three = rule_holds(fixture::three(), r);
  CHECK_FALSE(on_three.holds);
  REQUIRE(on_three.counter.has_value());
  CHECK(*on_three.counter == Assignment{1});
  CHECK(rule_holds(product(fixture::three(), fixture::two()), r).holds);
  CHECK(rule_holds(fixture::three(), parse_rule("x1 = 0 |- 1 = 1")).holds);
  const auto trivial = rule_holds(fixture::two(), parse_rule("x1 = x1 |- 0 = 1"));
  CHECK_FALSE(trivial.holds);
  CHECK(*trivial.counter == Assignment{0});
}

TEST_CASE("rule checking agrees with a naive evaluator") {
  std::mt19937 rng(12345);
  const auto algebras = up_to_eight();
  std::size_t refuted = 0;
  for (int i = 0; i < 150; ++i) {
    const unsigned arity = 1 + i % 2;
    std::vector<Equation> premises;
    const int count = static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) premises.push_back(random_equation(rng, arity));
    const Rule r = make_rule(premises, random_equation(rng, arity), arity);
    for (const auto& a : algebras) {
      const oracle::OrderOnly naive{a};
      const auto got = rule_holds(a, r);
      REQUIRE(got.holds == naive.rule_holds(r));
      if (!got.holds) {
        ++refuted;
        REQUIRE(got.counter.has_value());
        bool premises_hold = true;
        for (const auto& p : r.premises) premises_hold = premises_hold && naive.eval(p.left, *got.counter) == naive.eval(p.right, *got.counter);
        CHECK(premises_hold);
        CHECK(naive.eval(r.conclusion.left, *got.counter) != naive.eval(r.conclusion.right, *got.counter));
      }
    }
  }
  CHECK(refuted > 0);
}

TEST_CASE("batches") {
  const Rule r = middle_element_rule();
  const auto family = upset_algebras_times_two(4);
  CHECK(family.size() == 24);
  CHECK(valid_in_all(family, r).holds);
  const std::vector<BiHeytingAlgebra> just_three{fixture::three()};
  const auto fails = valid_in_all(just_three, r);
  CHECK_FALSE(fails.holds);
  CHECK(fails.failing_index == std::optional<std::size_t>{0});
  CHECK(valid_in_all(std::span<const BiHeytingAlgebra>{}, r).holds);
}

TEST_CASE("variety counterexamples") {
  const Rule r = middle_element_rule();
  const auto found = variety_counterexample(fixture::three(), r, 1);
  REQUIRE(found.has_value());
  CHECK(found->power == 1);
  CHECK(found->algebra.size() == 3);
  CHECK(found->congruence.is_identity());
  CHECK_FALSE(rule_holds(found->algebra, r).holds);
  const oracle::OrderOnly naive{found->algebra};
  CHECK_FALSE(naive.eval(r.conclusion.left, found->assignment) == naive.eval(r.conclusion.right, found->assignment));

  // The construction path re-checks: subuniverse of the power, congruence of
  // that subalgebra, quotient isomorphic to the reported algebra.
  const auto pw = power(fixture::three(), found->power);
  CHECK(is_subuniverse(pw, found->subuniverse));
  const auto sub = subalgebra(pw, found->subuniverse);
  CHECK(is_congruence(sub.algebra, found->congruence));
  CHECK(is_isomorphic(quotient(sub.algebra, found->congruence), found->algebra).has_value());

  CHECK_FALSE(variety_counterexample(fixture::two(), r, 2).has_value());
  CHECK_FALSE(variety_counterexample(fixture::three(), parse_rule("|- 1 = 1"), 2).has_value());
  CHECK_THROWS_AS(variety_counterexample(fixture::three(), r, 0), Error);
}

TEST_CASE("admissibility evidence") {
  const std::vector<BiHeytingAlgebra> three{fixture::three()};
  const Rule r = middle_element_rule();
  const auto one = admissible_up_to(three, r, 1);
  CHECK(one.verdicts == std::vector<bool>{true});
  CHECK_FALSE(one.truncated);

  const auto two = admissible_up_to(three, r, 2);
  CHECK(two.verdicts == std::vector<bool>{true, true});

  const std::vector<BiHeytingAlgebra> boolean{fixture::two()};
  const auto refuted = admissible_up_to(boolean, parse_rule("x1 = 1 |- 0 = 1"), 1);
  CHECK(refuted.verdicts == std::vector<bool>{false});
  CHECK(refuted.refuted_at == std::optional<std::size_t>{1});

  // A false verdict is final as n grows.
  const auto longer = admissible_up_to(boolean, parse_rule("x1 = 1 |- 0 = 1"), 3);
  bool seen_false = false;
  for (bool v : longer.verdicts) {
    if (seen_false) CHECK_FALSE(v);
    seen_false = seen_false || !v;
  }

  Budget tight;
  tight.free_ambient = 100;
  const auto cut = admissible_up_to(three, r, 2, tight);
  CHECK(cut.truncated);
  CHECK(cut.verdicts.size() < 2);
  CHECK_FALSE(cut.truncation_reason.empty());
}

TEST_CASE("premise unifiers") {
  const std::vector<BiHeytingAlgebra> three{fixture::three()};
  const auto none = premise_unifier(three, middle_element_rule(), 2);
  CHECK_FALSE(none.unifier.has_value());
  CHECK(none.searched_up_to == 2);

  const Rule top_rule = parse_rule("x1 = 1 |- 0 = 1");
  const auto some = premise_unifier(three, top_rule, 1);
  REQUIRE(some.unifier.has_value());
  CHECK(verify_unifier(three, top_rule, *some.unifier));
  // The unifier must send x1 to the top of the free algebra.
  for (const auto& coord : some.unifier->coordinates)
    for (std::size_t k = 0; k < coord.size(); ++k) CHECK(coord[k] == three[0].top());

  const std::vector<BiHeytingAlgebra> boolean{fixture::two()};
  CHECK_FALSE(premise_unifier(boolean, middle_element_rule(), 1).unifier.has_value());
}

TEST_CASE("positive existential sentences") {
  const Rule r = middle_element_rule();
  const auto on_three = pos_existential_holds(fixture::three(), r.premises, 1);
  CHECK(on_three.holds);
  CHECK(on_three.witness == std::optional<Assignment>{Assignment{1}});
  CHECK_FALSE(pos_existential_holds(product(fixture::three(), fixture::two()), r.premises, 1).holds);
  const std::vector<Equation> trivial{parse_equation("1 = 1")};
  CHECK(pos_existential_holds(fixture::two(), trivial, 0).holds);
  CHECK_THROWS_AS(pos_existential_holds(fixture::two(), r.premises, 0), Error);
}

TEST_CASE("assignment enumeration") {
  std::vector<Assignment> seen;
  for_each_assignment(3, 2, Budget{}, [&](const Assignment& a) {
    seen.push_back(a);
    return true;
  });
  REQUIRE(seen.size() == 9);
  CHECK(seen[1] == Assignment{0, 1});
  CHECK(seen[3] == Assignment{1, 0});
  CHECK(assignment_count(3, 0, 10) == 1);
  CHECK_THROWS_AS(assignment_count(10, 10, 1000), BudgetExceeded);
}

}

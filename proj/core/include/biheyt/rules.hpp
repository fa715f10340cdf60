#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biheyt/algebra.hpp"
#include "biheyt/budget.hpp"
#include "biheyt/element_set.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/morphisms.hpp"
#include "biheyt/term.hpp"

namespace biheyt {

// Values of x1, x2, ... in order.
using Assignment = std::vector<Element>;

// Throws UnboundVariable if the term uses a variable beyond the assignment.
Element eval_term(const BiHeytingAlgebra& a, const Term& t, std::span<const Element> assignment);
bool satisfies(const BiHeytingAlgebra& a, const Equation& e, std::span<const Element> assignment);

// Calls visit(assignment) for every assignment of `arity` variables into a
// carrier of `size` elements, in ascending mixed-radix order with x1 most
// significant, until visit returns false. Throws BudgetExceeded before
// starting if size^arity is over the cap.
template <typename Visit>
void for_each_assignment(std::size_t size, unsigned arity, const Budget& budget, Visit&& visit);

struct RuleCheck {
  bool holds = true;
  // First refuting assignment, when holds is false.
  std::optional<Assignment> counter;
};

RuleCheck rule_holds(const BiHeytingAlgebra& a, const Rule& r, const Budget& budget = {});

struct BatchCheck {
  bool holds = true;
  std::optional<std::size_t> failing_index;
  std::optional<Assignment> counter;
};

// Conjunction of rule_holds over the list, stopping at the first failure.
BatchCheck valid_in_all(std::span<const BiHeytingAlgebra> algebras, const Rule& r, const Budget& budget = {});

// A member of V(gen) that refutes a rule, with the path that builds it:
// gen^power, then a subuniverse, then a congruence.
struct VarietyCounterexample {
  std::size_t power = 0;
  ElementSet subuniverse;
  Congruence congruence;
  BiHeytingAlgebra algebra;
  Assignment assignment;
};

// Searches quotients of subalgebras of gen^m for m = 1..power_bound in
// ascending m, canonical subuniverse order and canonical congruence order.
// Empty means none within the bound; a cut search throws BudgetExceeded.
std::optional<VarietyCounterexample> variety_counterexample(const BiHeytingAlgebra& gen, const Rule& r,
                                                            std::size_t power_bound,
                                                            const Budget& budget = {});

// gen^m with the same pair encoding as product().
BiHeytingAlgebra power(const BiHeytingAlgebra& gen, std::size_t m);

struct AdmissibilityEvidence {
  // verdicts[i]: rule holds in the free algebra on i + 1 generators.
  std::vector<bool> verdicts;
  // Set when a free algebra exceeded its budget; verdicts stops there.
  bool truncated = false;
  std::string truncation_reason;
  // Where the first refutation happened, if any: generator count and
  // assignment into that free algebra. A refutation disproves admissibility;
  // an all-true list is only evidence up to the bound.
  std::optional<std::size_t> refuted_at;
  std::optional<Assignment> counter;
};

AdmissibilityEvidence admissible_up_to(std::span<const BiHeytingAlgebra> gens, const Rule& r,
                                       std::size_t n_bound, const Budget& budget = {});

// Assignment of a rule's variables into F(generators) satisfying every
// premise; each assigned element is recorded as its coordinate tuple so it
// can be checked against the generating algebras directly.
struct Unifier {
  std::size_t generators = 0;
  Assignment assignment;
  std::vector<GeneratorAssignment> points;
  std::vector<std::vector<Element>> coordinates;  // one tuple per variable
};

struct UnifierSearch {
  std::optional<Unifier> unifier;
  // Largest generator count fully searched.
  std::size_t searched_up_to = 0;
};

UnifierSearch premise_unifier(std::span<const BiHeytingAlgebra> gens, const Rule& r, std::size_t m_bound,
                              const Budget& budget = {});

// Each premise, with the unifier substituted, holds at every coordinate,
// i.e. is an identity of V(gens).
bool verify_unifier(std::span<const BiHeytingAlgebra> gens, const Rule& r, const Unifier& u);

struct ExistentialCheck {
  bool holds = false;
  std::optional<Assignment> witness;
};

// Some assignment of `arity` variables satisfies every equation of body.
ExistentialCheck pos_existential_holds(const BiHeytingAlgebra& a, std::span<const Equation> body,
                                       unsigned arity, const Budget& budget = {});

// ---------------------------------------------------------------------------

std::uint64_t assignment_count(std::size_t size, unsigned arity, std::uint64_t cap);

template <typename Visit>
void for_each_assignment(std::size_t size, unsigned arity, const Budget& budget, Visit&& visit) {
  const std::uint64_t total = assignment_count(size, arity, budget.assignments);
  Assignment current(arity, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    if (!visit(static_cast<const Assignment&>(current))) return;
    for (unsigned k = arity; k-- > 0;) {
      if (++current[k] < size) break;
      current[k] = 0;
    }
  }
}

}  // namespace biheyt

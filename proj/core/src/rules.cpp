#include "biheyt/rules.hpp"

#include <string>

#include "biheyt/error.hpp"

namespace biheyt {

Element eval_term(const BiHeytingAlgebra& a, const Term& t, std::span<const Element> assignment) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (t.index() > assignment.size())
        throw Error(ErrorKind::UnboundVariable, "x" + std::to_string(t.index()) + " has no value");
      return assignment[t.index() - 1];
    case Term::Kind::Zero: return a.bot();
    case Term::Kind::One: return a.top();
    case Term::Kind::Meet: return a.meet(eval_term(a, t.lhs(), assignment), eval_term(a, t.rhs(), assignment));
    case Term::Kind::Join: return a.join(eval_term(a, t.lhs(), assignment), eval_term(a, t.rhs(), assignment));
    case Term::Kind::Imp: return a.imp(eval_term(a, t.lhs(), assignment), eval_term(a, t.rhs(), assignment));
    case Term::Kind::Coimp:
      return a.coimp(eval_term(a, t.lhs(), assignment), eval_term(a, t.rhs(), assignment));
    case Term::Kind::Neg: return a.imp(eval_term(a, t.lhs(), assignment), a.bot());
    case Term::Kind::Coneg: return a.coimp(a.top(), eval_term(a, t.lhs(), assignment));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown term kind");
}

bool satisfies(const BiHeytingAlgebra& a, const Equation& e, std::span<const Element> assignment) {
  return eval_term(a, e.left, assignment) == eval_term(a, e.right, assignment);
}

std::uint64_t assignment_count(std::size_t size, unsigned arity, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned k = 0; k < arity; ++k) {
    if (size != 0 && total > cap / size)
      throw BudgetExceeded(std::to_string(size) + "^" + std::to_string(arity) +
                           " assignments exceed the cap of " + std::to_string(cap));
    total *= size;
  }
  if (total > cap)
    throw BudgetExceeded(std::to_string(total) + " assignments exceed the cap of " + std::to_string(cap));
  return total;
}

RuleCheck rule_holds(const BiHeytingAlgebra& a, const Rule& r, const Budget& budget) {
  RuleCheck out;
  for_each_assignment(a.size(), r.arity, budget, [&](const Assignment& asg) {
    for (const Equation& p : r.premises)
      if (!satisfies(a, p, asg)) return true;
    if (satisfies(a, r.conclusion, asg)) return true;
    out.holds = false;
    out.counter = asg;
    return false;
  });
  return out;
}

BatchCheck valid_in_all(std::span<const BiHeytingAlgebra> algebras, const Rule& r, const Budget& budget) {
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    RuleCheck c = rule_holds(algebras[i], r, budget);
    if (!c.holds) return {false, i, std::move(c.counter)};
  }
  return {};
}

BiHeytingAlgebra power(const BiHeytingAlgebra& gen, std::size_t m) {
  if (m == 0) return BiHeytingAlgebra::degenerate();
  BiHeytingAlgebra out = gen;
  for (std::size_t i = 1; i < m; ++i) out = product(out, gen);
  return out;
}

std::optional<VarietyCounterexample> variety_counterexample(const BiHeytingAlgebra& gen, const Rule& r,
                                                            std::size_t power_bound, const Budget& budget) {
  if (power_bound == 0) throw Error(ErrorKind::InvalidArgument, "power bound must be at least 1");
  for (std::size_t m = 1; m <= power_bound; ++m) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < m; ++i) {
      size *= gen.size();
      if (size > budget.max_carrier)
        throw BudgetExceeded("power " + std::to_string(m) + " of a " + std::to_string(gen.size()) +
                             "-element algebra exceeds the carrier cap");
    }
    const BiHeytingAlgebra ambient = power(gen, m);
    for (const ElementSet& sub : subalgebras(ambient, budget)) {
      const Subalgebra s = subalgebra(ambient, sub);
      for (const Congruence& c : congruences(s.algebra, budget)) {
        BiHeytingAlgebra q = quotient(s.algebra, c);
        RuleCheck check = rule_holds(q, r, budget);
        if (!check.holds)
          return VarietyCounterexample{m, sub, c, std::move(q), std::move(*check.counter)};
      }
    }
  }
  return std::nullopt;
}

AdmissibilityEvidence admissible_up_to(std::span<const BiHeytingAlgebra> gens, const Rule& r,
                                       std::size_t n_bound, const Budget& budget) {
  AdmissibilityEvidence out;
  for (std::size_t n = 1; n <= n_bound; ++n) {
    try {
      const FreeAlgebra f = free_algebra(gens, n, budget);
      RuleCheck c = rule_holds(f.algebra, r, budget);
      out.verdicts.push_back(c.holds);
      if (!c.holds && !out.refuted_at) {
        out.refuted_at = n;
        out.counter = std::move(c.counter);
      }
    } catch (const BudgetExceeded& e) {
      out.truncated = true;
      out.truncation_reason = e.what();
      break;
    }
  }
  return out;
}

UnifierSearch premise_unifier(std::span<const BiHeytingAlgebra> gens, const Rule& r, std::size_t m_bound,
                              const Budget& budget) {
  UnifierSearch out;
  for (std::size_t m = 1; m <= m_bound; ++m) {
    const FreeAlgebra f = free_algebra(gens, m, budget);
    std::optional<Assignment> found;
    for_each_assignment(f.algebra.size(), r.arity, budget, [&](const Assignment& asg) {
      for (const Equation& p : r.premises)
        if (!satisfies(f.algebra, p, asg)) return true;
      found = asg;
      return false;
    });
    out.searched_up_to = m;
    if (found) {
      Unifier u;
      u.generators = m;
      u.assignment = *found;
      u.points = f.assignments;
      for (Element e : *found) u.coordinates.push_back(f.coordinates[e]);
      out.unifier = std::move(u);
      return out;
    }
  }
  return out;
}

bool verify_unifier(std::span<const BiHeytingAlgebra> gens, const Rule& r, const Unifier& u) {
  if (u.coordinates.size() != r.arity) return false;
  for (std::size_t k = 0; k < u.points.size(); ++k) {
    const BiHeytingAlgebra& a = gens[u.points[k].algebra];
    Assignment local(r.arity);
    for (unsigned v = 0; v < r.arity; ++v) local[v] = u.coordinates[v].at(k);
    for (const Equation& p : r.premises)
      if (!satisfies(a, p, local)) return false;
  }
  return true;
}

ExistentialCheck pos_existential_holds(const BiHeytingAlgebra& a, std::span<const Equation> body, unsigned arity,
                                       const Budget& budget) {
  for (const Equation& e : body)
    if (max_variable(e) > arity)
      throw Error(ErrorKind::UnboundVariable, "sentence body uses a variable beyond its arity");
  ExistentialCheck out;
  for_each_assignment(a.size(), arity, budget, [&](const Assignment& asg) {
    for (const Equation& e : body)
      if (!satisfies(a, e, asg)) return true;
    out.holds = true;
    out.witness = asg;
    return false;
  });
  return out;
}

}  // namespace biheyt

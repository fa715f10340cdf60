#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biheyt/element_set.hpp"
#include "biheyt/poset.hpp"

namespace biheyt {

enum class Operation { Meet, Join, Imp, Coimp };

inline constexpr std::array<Operation, 4> kOperations{Operation::Meet, Operation::Join,
                                                      Operation::Imp, Operation::Coimp};

std::string_view to_string(Operation op) noexcept;

// Dense operation tables of a finite algebra, row-major: table[a * size + b].
struct OperationTables {
  std::size_t size = 0;
  Element bot = 0;
  Element top = 0;
  std::vector<Element> meet, join, imp, coimp;
};

// A finite bi-Heyting algebra: a bounded distributive lattice with Heyting
// implication (residual of meet) and co-implication (co-residual of join).
// Immutable once built; the order is derived from the meet table.
class BiHeytingAlgebra {
 public:
  // Builds the algebra on a lattice order by residuation. Throws
  // InvalidArgument (bad poset or bounds), NotALattice, NotDistributive or
  // ResiduationFailure. A one-element order yields the degenerate algebra.
  static BiHeytingAlgebra from_lattice_order(const Poset& order, Element bot, Element top);

  // Wraps precomputed tables. Only shape is checked here; callers that did
  // not derive the tables from a known algebra should run check_invariants.
  static BiHeytingAlgebra from_tables(OperationTables tables, std::vector<std::string> labels = {});

  // The one-element algebra (bot == top).
  static BiHeytingAlgebra degenerate();

  std::size_t size() const noexcept { return tables_.size; }
  Element bot() const noexcept { return tables_.bot; }
  Element top() const noexcept { return tables_.top; }
  bool is_degenerate() const noexcept { return tables_.size == 1; }

  Element meet(Element a, Element b) const { return tables_.meet[a * size() + b]; }
  Element join(Element a, Element b) const { return tables_.join[a * size() + b]; }
  Element imp(Element a, Element b) const { return tables_.imp[a * size() + b]; }
  Element coimp(Element a, Element b) const { return tables_.coimp[a * size() + b]; }
  Element apply(Operation op, Element a, Element b) const { return table(op)[a * size() + b]; }
  const std::vector<Element>& table(Operation op) const;

  // Negation a -> 0 and co-negation 1 -< a.
  Element neg(Element a) const { return imp(a, bot()); }
  Element coneg(Element a) const { return coimp(top(), a); }

  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  Poset order() const;

  const OperationTables& tables() const noexcept { return tables_; }

  // Optional human-readable element names; label() falls back to the index.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element e) const;

 private:
  BiHeytingAlgebra() = default;

  OperationTables tables_;
  std::vector<std::string> labels_;
};

// Exhaustive check of the lattice axioms, bounds, distributivity, residuation
// and co-residuation. Returns a description of the first failure, or empty.
std::optional<std::string> check_invariants(const BiHeytingAlgebra& a);

// The n-element chain 0 < a1 < ... < a(n-2) < 1. Throws InvalidArgument for n < 2.
BiHeytingAlgebra chain_algebra(std::size_t n);

// Componentwise algebra on pairs; pair (x, y) has index x * |b| + y.
BiHeytingAlgebra product(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b);

// Every element has a complement: join(x, neg x) = top for all x.
bool is_boolean(const BiHeytingAlgebra& a);

bool is_chain(const BiHeytingAlgebra& a);

}  // namespace biheyt

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "biheyt/algebra.hpp"
#include "biheyt/budget.hpp"

namespace biheyt {

// An assignment of the free generators into one generating algebra; it
// indexes one coordinate of the ambient product.
struct GeneratorAssignment {
  std::size_t algebra = 0;
  std::vector<Element> values;
};

struct FreeAlgebra {
  BiHeytingAlgebra algebra;
  // Element index of each free generator, in generator order.
  std::vector<Element> generators;
  // Coordinates of the ambient product, in canonical order.
  std::vector<GeneratorAssignment> assignments;
  // coordinates[e][k]: value of element e at assignment k.
  std::vector<std::vector<Element>> coordinates;
};

// Free algebra on n generators for the variety generated by `gens`: the
// subalgebra of prod_A A^(A^n) generated by the projection tuples.
//
// Coordinates run over the generating algebras in order, and for each over
// the assignments A^n read as base-|A| numbers with the first generator most
// significant. Elements are numbered in discovery order of the closure: bot,
// top, the generators, then for k = 0, 1, ... and j = 0..k the results of
// meet, join, imp, coimp on (e_j, e_k) followed by (e_k, e_j).
//
// Throws BudgetExceeded when the ambient product exceeds budget.free_ambient
// or the generated carrier exceeds budget.max_carrier; never returns a
// partial algebra.
FreeAlgebra free_algebra(std::span<const BiHeytingAlgebra> gens, std::size_t n, const Budget& budget = {});

}  // namespace biheyt

#pragma once

#include <vector>

#include "biheyt/algebra.hpp"
#include "biheyt/poset.hpp"

namespace biheyt {

// Algebra of up-sets of p, elements in the canonical up-set order. Meet and
// join are intersection and union; imp(U, V) is the complement of the
// down-closure of U \ V and coimp(U, V) is the up-closure of U \ V.
BiHeytingAlgebra upset_algebra(const Poset& p);

// Join-irreducible elements of a, ascending.
std::vector<Element> join_irreducibles(const BiHeytingAlgebra& a);

// Poset of join-irreducibles under the reverse of the algebra order, so that
// x |-> {j : j <= x} lands in up-sets. Element i of the result is the i-th
// entry of join_irreducibles(a). Throws DegenerateAlgebra.
Poset dual_poset(const BiHeytingAlgebra& a);

struct Representation {
  Poset dual;
  BiHeytingAlgebra upsets;
  // Image of each element of a in `upsets`.
  std::vector<Element> map;
};

// The isomorphism a -> upset_algebra(dual_poset(a)), x |-> {j : j <= x},
// checked to be bijective and to preserve every operation and constant.
// Throws VerificationFailure if that check fails.
Representation representation_iso(const BiHeytingAlgebra& a);

// Up(P) x 2 for every poset P with 1 <= |P| <= max_size (one per
// isomorphism class, ascending size, enumerate_posets order).
std::vector<BiHeytingAlgebra> upset_algebras_times_two(std::size_t max_size);

}  // namespace biheyt

#pragma once

#include <vector>

#include "biheyt/algebra.hpp"
#include "biheyt/duality.hpp"
#include "biheyt/poset.hpp"

namespace fixture {

inline biheyt::BiHeytingAlgebra two() { return biheyt::chain_algebra(2); }
inline biheyt::BiHeytingAlgebra three() { return biheyt::chain_algebra(3); }

// Bounded lattice given by an explicit order table over 0..n-1.
inline biheyt::Poset order_from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& less) {
  biheyt::Poset p(n);
  for (biheyt::Element i = 0; i < n; ++i) p.set_leq(i, i);
  for (auto [i, j] : less) p.set_leq(i, j);
  return p;
}

// M3: 0 < a, b, c < 1 with a, b, c pairwise incomparable.
inline biheyt::Poset diamond() {
  return order_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

// N5: 0 < a < b < 1 and 0 < c < 1.
inline biheyt::Poset pentagon() {
  return order_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}});
}

inline biheyt::Poset chain_and_two_points() {
  using namespace biheyt;
  return disjoint_union(disjoint_union(chain_poset(2), chain_poset(1)), chain_poset(1));
}

// Up(P) for every enumerated P with 1 <= |P| <= bound.
inline std::vector<biheyt::BiHeytingAlgebra> upset_family(std::size_t bound) {
  std::vector<biheyt::BiHeytingAlgebra> out;
  for (std::size_t n = 1; n <= bound; ++n)
    for (const auto& p : biheyt::enumerate_posets(n)) out.push_back(biheyt::upset_algebra(p));
  return out;
}

// A varied collection of small algebras for property checks.
inline std::vector<biheyt::BiHeytingAlgebra> zoo() {
  using namespace biheyt;
  std::vector<BiHeytingAlgebra> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(chain_algebra(n));
  out.push_back(product(two(), two()));
  out.push_back(product(three(), two()));
  out.push_back(product(three(), three()));
  out.push_back(product(product(three(), two()), two()));
  for (auto& a : upset_family(4)) out.push_back(std::move(a));
  return out;
}

}  // namespace fixture

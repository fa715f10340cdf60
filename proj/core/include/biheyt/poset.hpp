#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biheyt/element_set.hpp"

namespace biheyt {

// A finite binary relation on {0, ..., size-1} that is meant to be a partial
// order. Construction does not check the axioms; validate_poset does, and
// operations documented as requiring a valid poset throw InvalidArgument
// otherwise.
class Poset {
 public:
  Poset() = default;
  // Discrete order (antichain) on `size` elements.
  explicit Poset(std::size_t size);
  // leq[i][j] means i <= j. Throws InvalidArgument if the table is not square.
  explicit Poset(const std::vector<std::vector<bool>>& leq);

  std::size_t size() const noexcept { return size_; }
  bool leq(Element i, Element j) const { return rel_[i * size_ + j] != 0; }
  bool less(Element i, Element j) const { return i != j && leq(i, j); }
  bool comparable(Element i, Element j) const { return leq(i, j) || leq(j, i); }
  void set_leq(Element i, Element j, bool value = true) { rel_[i * size_ + j] = value ? 1 : 0; }

  std::vector<std::vector<bool>> table() const;

  // Optional display names, one per element (empty when absent).
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Element i) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.size_ == b.size_ && a.rel_ == b.rel_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> rel_;
  std::vector<std::string> labels_;
};

enum class PosetAxiom { Reflexivity, Antisymmetry, Transitivity };

struct PosetViolation {
  PosetAxiom axiom;
  // Witness: (i) for reflexivity, (i, j) for antisymmetry, (i, j, k) for
  // transitivity with i <= j <= k but not i <= k.
  Element i = 0, j = 0, k = 0;

  std::string describe() const;
};

// Empty optional means the relation is a partial order. Axioms are checked in
// the order reflexivity, antisymmetry, transitivity; the first violation found
// in ascending index order is reported.
std::optional<PosetViolation> validate_poset(const Poset& p);

// Throws InvalidArgument describing the violation.
void require_valid(const Poset& p);

Poset chain_poset(std::size_t n);
Poset antichain_poset(std::size_t n);

// Smallest up-set / down-set containing s.
ElementSet up_closure(const Poset& p, const ElementSet& s);
ElementSet down_closure(const Poset& p, const ElementSet& s);
bool is_upset(const Poset& p, const ElementSet& s);

// All up-sets of p, in canonical order (see canonical_less).
std::vector<ElementSet> upsets(const Poset& p);

// Carrier of p followed by carrier of q, no relations across the parts.
Poset disjoint_union(const Poset& p, const Poset& q);

// An order isomorphism p -> q (as the image of each element of p), or empty.
// Search assigns p's elements in ascending order to the smallest admissible
// element of q, so the identity is returned whenever it works.
std::optional<std::vector<Element>> poset_isomorphic(const Poset& p, const Poset& q);

// Covering pairs (i, j): i < j with nothing strictly in between.
std::vector<std::pair<Element, Element>> hasse_edges(const Poset& p);

// One representative per isomorphism class of n-element posets. Each
// representative is its own canonical form: the relabelling whose row-major
// relation table is lexicographically minimal. Output is sorted by that
// table. Throws BudgetExceeded when n exceeds max_size (hard limit 8).
std::vector<Poset> enumerate_posets(std::size_t n, std::size_t max_size = 6);

// Canonical form used by enumerate_posets (n <= 8).
Poset canonical_form(const Poset& p);

}  // namespace biheyt

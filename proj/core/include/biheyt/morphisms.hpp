#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biheyt/algebra.hpp"
#include "biheyt/budget.hpp"
#include "biheyt/element_set.hpp"

namespace biheyt {

// A map between carriers; map[x] is the image of x. Whether it preserves the
// operations is a property of the (source, target) pair, see is_homomorphism.
struct Morphism {
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

// Preserves bot, top and the four operation tables pointwise.
bool is_homomorphism(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                     std::span<const Element> map);
bool is_injective(std::span<const Element> map);

// All homomorphisms source -> target, lexicographic by map. Backtracking over
// source elements in ascending order; each choice is propagated through the
// operation tables so images forced by earlier choices are never guessed.
std::vector<Morphism> homomorphisms(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                                    const Budget& budget = {});
std::vector<Morphism> embeddings(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                                 const Budget& budget = {});
// First isomorphism in lexicographic order, if any.
std::optional<Morphism> is_isomorphic(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b,
                                      const Budget& budget = {});

// Smallest subuniverse containing seed, bot and top.
ElementSet generated_subalgebra(const BiHeytingAlgebra& a, const ElementSet& seed);
bool is_subuniverse(const BiHeytingAlgebra& a, const ElementSet& s);

// Every subuniverse of a, in canonical element-set order.
std::vector<ElementSet> subalgebras(const BiHeytingAlgebra& a, const Budget& budget = {});

struct Subalgebra {
  BiHeytingAlgebra algebra;
  // inclusion[i] is the element of the parent that element i stands for.
  std::vector<Element> inclusion;
};

// Induced algebra on a subuniverse, elements in ascending parent order.
// Throws InvalidArgument if s is not closed.
Subalgebra subalgebra(const BiHeytingAlgebra& a, const ElementSet& s);

// Partition of a carrier; block[x] numbers blocks by their least member.
class Congruence {
 public:
  Congruence() = default;
  // Renumbers arbitrary block labels into canonical form.
  explicit Congruence(std::vector<Element> block_of);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return block_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  Element block(Element x) const { return block_[x]; }
  const std::vector<Element>& blocks() const noexcept { return block_; }
  bool related(Element x, Element y) const { return block_[x] == block_[y]; }
  bool is_identity() const noexcept { return num_blocks_ == block_.size(); }
  bool is_total() const noexcept { return num_blocks_ <= 1; }
  std::vector<std::vector<Element>> classes() const;

  // Common refinement and equivalence join.
  friend Congruence meet(const Congruence& a, const Congruence& b);
  friend Congruence join(const Congruence& a, const Congruence& b);
  // Refinement order: a <= b when every a-block lies inside a b-block.
  friend bool refines(const Congruence& a, const Congruence& b);

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Element> block_;
  std::size_t num_blocks_ = 0;
};

// Equivalence relation compatible with all four operations in both argument
// positions.
bool is_congruence(const BiHeytingAlgebra& a, const Congruence& c);

// Least congruence containing the given pairs.
Congruence congruence_generated(const BiHeytingAlgebra& a,
                                std::span<const std::pair<Element, Element>> pairs);
Congruence principal_congruence(const BiHeytingAlgebra& a, Element x, Element y);

// All congruences (join closure of the principal ones). Order: more blocks
// first, then lexicographic block vectors; the identity comes first.
std::vector<Congruence> congruences(const BiHeytingAlgebra& a, const Budget& budget = {});

struct SubdirectIrreducibility {
  bool irreducible = false;
  // Least non-identity congruence; present iff irreducible.
  std::optional<Congruence> monolith;
};

// Intersects the principal congruences Cg(x, y), x < y. Throws DegenerateAlgebra.
SubdirectIrreducibility is_subdirectly_irreducible(const BiHeytingAlgebra& a);

// Blocks become elements in block-number order. Throws InvalidCongruence.
BiHeytingAlgebra quotient(const BiHeytingAlgebra& a, const Congruence& c);
// The canonical surjection a -> a / c.
Morphism natural_map(const Congruence& c);

struct SeparatingWitness {
  Element x = 0;
  Element y = 0;
  // Index into PowerMembership::homomorphisms.
  std::size_t hom = 0;
};

struct PowerMembership {
  bool member = false;
  std::vector<Morphism> homomorphisms;
  // One entry per pair x < y, lexicographic, when member is true.
  std::vector<SeparatingWitness> certificate;
  // First pair no homomorphism separates, when member is false.
  std::optional<std::pair<Element, Element>> unseparated;
};

// b embeds into a finite power of f iff homomorphisms b -> f separate every
// pair of distinct elements; for finite algebras this decides b in Q(f).
PowerMembership embeds_in_power(const BiHeytingAlgebra& b, const BiHeytingAlgebra& f,
                                const Budget& budget = {});

// The embedding b -> f^m, m = certificate size, as one coordinate tuple per
// element of b.
std::vector<std::vector<Element>> power_embedding(const BiHeytingAlgebra& b,
                                                  const PowerMembership& membership);

// A quotient of a subalgebra (a member of HS(a)) together with how it is
// obtained.
struct Section {
  ElementSet subuniverse;
  Congruence congruence;
};

// First section of a isomorphic to target, scanning subuniverses and then
// congruences in canonical order.
std::optional<Section> find_section(const BiHeytingAlgebra& a, const BiHeytingAlgebra& target,
                                    const Budget& budget = {});

// Subdirectly irreducible members of HS(a), one per isomorphism type, in
// discovery order. Degenerate quotients are skipped.
std::vector<BiHeytingAlgebra> si_sections(const BiHeytingAlgebra& a, const Budget& budget = {});

}  // namespace biheyt

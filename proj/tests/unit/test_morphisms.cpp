#include <doctest.h>

#include <cmath>
#include <set>

#include "biheyt/error.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/morphisms.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biheyt;

namespace {

std::set<std::vector<Element>> as_maps(const std::vector<Morphism>& ms) {
  std::set<std::vector<Element>> out;
  for (const auto& m : ms) out.insert(m.map);
  return out;
}

std::set<std::vector<Element>> as_member_lists(const std::vector<ElementSet>& ss) {
  std::set<std::vector<Element>> out;
  for (const auto& s : ss) out.insert(members(s));
  return out;
}

std::vector<BiHeytingAlgebra> small_zoo() {
  std::vector<BiHeytingAlgebra> out;
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(chain_algebra(n));
  out.push_back(product(fixture::two(), fixture::two()));
  out.push_back(product(fixture::three(), fixture::two()));
  for (auto& a : fixture::upset_family(3)) out.push_back(std::move(a));
  return out;
}

}  // namespace

TEST_SUITE("morphisms") {

TEST_CASE("homomorphism examples") {
  const auto two = fixture::two();
  const auto three = fixture::three();
  CHECK(as_maps(homomorphisms(two, two)) == std::set<std::vector<Element>>{{0, 1}});
  CHECK(homomorphisms(three, two).empty());
  CHECK(as_maps(homomorphisms(two, three)) == std::set<std::vector<Element>>{{0, 2}});
}

TEST_CASE("homomorphism search agrees with brute force") {
  const auto zoo = small_zoo();
  for (const auto& a : zoo)
    for (const auto& b : zoo) {
      if (std::pow(double(b.size()), double(a.size())) > 2e5) continue;
      const auto found = homomorphisms(a, b);
      const auto all = oracle::brute_homomorphisms(a, b);
      CHECK(as_maps(found) == std::set<std::vector<Element>>(all.begin(), all.end()));
      for (const auto& m : found) CHECK(oracle::preserves_everything(a, b, m.map));
      for (std::size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1].map < found[i].map);
      const auto emb = embeddings(a, b);
      const auto brute = oracle::brute_homomorphisms(a, b, true);
      CHECK(as_maps(emb) == std::set<std::vector<Element>>(brute.begin(), brute.end()));
    }
}

TEST_CASE("embeddings of three") {
  const auto three = fixture::three();
  // The middle element would need an image x with !x = 0 and ~x = 1; in 3 x 2
  // the second coordinate of such an x cannot exist.
  CHECK(embeddings(three, product(three, fixture::two())).empty());
  CHECK(oracle::brute_homomorphisms(three, product(three, fixture::two()), true).empty());
  CHECK(embeddings(three, product(fixture::two(), fixture::two())).empty());
  for (const auto& h : upset_algebras_times_two(3)) CHECK(embeddings(three, h).empty());
  CHECK(embeddings(three, product(three, three)).size() == 1);
}

TEST_CASE("isomorphism") {
  const auto f = product(product(fixture::three(), fixture::two()), fixture::two());
  const auto u = upset_algebra(fixture::chain_and_two_points());
  const auto iso = is_isomorphic(f, u);
  REQUIRE(iso.has_value());
  CHECK(oracle::preserves_everything(f, u, iso->map));
  CHECK_FALSE(is_isomorphic(fixture::three(), fixture::two()).has_value());
  CHECK(is_isomorphic(product(fixture::three(), fixture::two()), product(fixture::two(), fixture::three())).has_value());
  CHECK_FALSE(is_isomorphic(chain_algebra(4), product(fixture::two(), fixture::two())).has_value());
}

TEST_CASE("generated subalgebras") {
  const auto three = fixture::three();
  CHECK(generated_subalgebra(three, make_set(3, {1})).all());
  for (const auto& a : small_zoo())
    CHECK(members(generated_subalgebra(a, ElementSet(a.size()))) == std::vector<Element>{a.bot(), a.top()});
  const auto bb = product(fixture::two(), fixture::two());
  CHECK(generated_subalgebra(bb, make_set(4, {2})).all());
}

TEST_CASE("subalgebra lists") {
  CHECK(subalgebras(fixture::two()).size() == 1);
  CHECK(as_member_lists(subalgebras(fixture::three())) == std::set<std::vector<Element>>{{0, 2}, {0, 1, 2}});
  const auto t2 = product(fixture::three(), fixture::two());
  const std::set<std::vector<Element>> expected{{0, 5}, {0, 1, 4, 5}, {0, 1, 2, 3, 4, 5}};
  CHECK(as_member_lists(subalgebras(t2)) == expected);
  for (const auto& a : small_zoo()) {
    const auto brute = oracle::brute_subuniverses(a);
    CHECK(as_member_lists(subalgebras(a)) == std::set<std::vector<Element>>(brute.begin(), brute.end()));
    for (const auto& s : subalgebras(a)) {
      CHECK(is_subuniverse(a, s));
      const auto sub = subalgebra(a, s);
      CHECK(oracle::preserves_everything(sub.algebra, a, sub.inclusion));
    }
  }
}

TEST_CASE("principal congruences") {
  const auto three = fixture::three();
  // Collapsing 0 with the middle forces ~a = ~0, i.e. 1 = 1 and 1 = 0 via !.
  CHECK(principal_congruence(three, 0, 1).is_total());
  CHECK(principal_congruence(three, 1, 2).is_total());
  CHECK(Congruence(oracle::brute_generated(three, {{0, 1}})).is_total());
  CHECK(congruence_generated(three, {}).is_identity());

  const auto t2 = product(three, fixture::two());
  for (Element x = 0; x < t2.size(); ++x)
    for (Element y = 0; y < t2.size(); ++y)
      CHECK(principal_congruence(t2, x, y).blocks() == oracle::brute_generated(t2, {{x, y}}));
}

TEST_CASE("congruence generation matches brute force") {
  for (const auto& a : small_zoo()) {
    const auto brute = oracle::brute_congruences(a);
    std::set<std::vector<Element>> expected(brute.begin(), brute.end());
    std::set<std::vector<Element>> got;
    for (const auto& c : congruences(a)) {
      CHECK(is_congruence(a, c));
      got.insert(c.blocks());
    }
    CHECK(got == expected);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = x + 1; y < a.size(); ++y) {
        const Congruence c = principal_congruence(a, x, y);
        CHECK(c.related(x, y));
        CHECK(c.blocks() == oracle::brute_generated(a, {{x, y}}));
      }
  }
}

TEST_CASE("congruences of three times two") {
  const auto t2 = product(fixture::three(), fixture::two());
  std::set<std::vector<Element>> got;
  for (const auto& c : congruences(t2)) got.insert(c.blocks());
  const std::set<std::vector<Element>> expected{
      {0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 0, 1}, {0, 1, 2, 3, 4, 5}};
  CHECK(got == expected);
}

TEST_CASE("congruence lattice operations") {
  const Congruence a({0, 0, 1, 1});
  const Congruence b({0, 1, 1, 2});
  CHECK(join(a, b).is_total());
  CHECK(meet(a, b).is_identity());
  CHECK(refines(meet(a, b), a));
  CHECK_FALSE(refines(a, b));
  CHECK(Congruence::identity(3).num_blocks() == 3);
  CHECK(Congruence::total(3).num_blocks() == 1);
  CHECK(a.classes() == std::vector<std::vector<Element>>{{0, 1}, {2, 3}});
}

TEST_CASE("subdirect irreducibility") {
  const auto three_si = is_subdirectly_irreducible(fixture::three());
  CHECK(three_si.irreducible);
  REQUIRE(three_si.monolith.has_value());
  CHECK(three_si.monolith->is_total());
  CHECK(is_subdirectly_irreducible(fixture::two()).irreducible);
  CHECK_FALSE(is_subdirectly_irreducible(product(fixture::three(), fixture::two())).irreducible);
  CHECK_FALSE(is_subdirectly_irreducible(product(fixture::two(), fixture::two())).irreducible);
  CHECK(is_subdirectly_irreducible(chain_algebra(5)).irreducible);
  CHECK_THROWS_AS(is_subdirectly_irreducible(BiHeytingAlgebra::degenerate()), Error);
}

TEST_CASE("quotients") {
  const auto three = fixture::three();
  CHECK(is_isomorphic(quotient(three, Congruence::identity(3)), three).has_value());
  CHECK(quotient(three, Congruence::total(3)).is_degenerate());
  try {
    (void)quotient(three, Congruence({0, 0, 1}));
    FAIL("expected an invalid congruence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCongruence);
  }
  const auto t2 = product(three, fixture::two());
  const Congruence second({0, 1, 0, 1, 0, 1});
  CHECK(is_isomorphic(quotient(t2, second), fixture::two()).has_value());
}

TEST_CASE("natural maps are surjective homomorphisms") {
  for (const auto& a : small_zoo())
    for (const auto& c : congruences(a)) {
      const auto q = quotient(a, c);
      const auto nat = natural_map(c);
      CHECK(oracle::preserves_everything(a, q, nat.map));
      CHECK(std::set<Element>(nat.map.begin(), nat.map.end()).size() == q.size());
    }
}

TEST_CASE("subdirect representation of three times two") {
  const auto t2 = product(fixture::three(), fixture::two());
  std::vector<Congruence> proper;
  for (const auto& c : congruences(t2))
    if (!c.is_total() && !c.is_identity()) proper.push_back(c);
  REQUIRE(proper.size() == 2);
  CHECK(meet(proper[0], proper[1]).is_identity());
  const auto q0 = quotient(t2, proper[0]);
  const auto q1 = quotient(t2, proper[1]);
  const auto target = product(q0, q1);
  std::vector<Element> m(t2.size());
  for (Element x = 0; x < t2.size(); ++x)
    m[x] = static_cast<Element>(proper[0].block(x) * q1.size() + proper[1].block(x));
  CHECK(oracle::preserves_everything(t2, target, m));
  CHECK(is_injective(m));
}

TEST_CASE("membership in powers") {
  const auto two = fixture::two();
  const auto three = fixture::three();
  const auto in3 = embeds_in_power(two, three);
  CHECK(in3.member);
  const auto not_in2 = embeds_in_power(three, two);
  CHECK_FALSE(not_in2.member);
  CHECK(not_in2.homomorphisms.empty());
  CHECK(not_in2.unseparated.has_value());
  CHECK_THROWS_AS(power_embedding(three, not_in2), Error);

  const std::vector<BiHeytingAlgebra> g{three};
  const auto f1 = free_algebra(g, 1).algebra;
  for (std::size_t d : {2u, 3u}) {
    const auto b = product(chain_algebra(d), f1);
    const auto m = embeds_in_power(b, f1);
    REQUIRE(m.member);
    for (const auto& h : m.homomorphisms) CHECK(oracle::preserves_everything(b, f1, h.map));
    for (const auto& w : m.certificate) CHECK(m.homomorphisms[w.hom](w.x) != m.homomorphisms[w.hom](w.y));
    const auto tuples = power_embedding(b, m);
    CHECK(std::set<std::vector<Element>>(tuples.begin(), tuples.end()).size() == b.size());
  }
}

TEST_CASE("sections") {
  const auto up = upset_algebra(fixture::order_from_pairs(3, {{0, 1}, {0, 2}}));
  const auto s = find_section(up, fixture::three());
  REQUIRE(s.has_value());
  CHECK(is_subuniverse(up, s->subuniverse));
  const auto sub = subalgebra(up, s->subuniverse);
  CHECK(is_congruence(sub.algebra, s->congruence));
  CHECK(is_isomorphic(quotient(sub.algebra, s->congruence), fixture::three()).has_value());
  CHECK_FALSE(find_section(product(fixture::two(), fixture::two()), fixture::three()).has_value());

  const auto sis = si_sections(fixture::three());
  REQUIRE(sis.size() == 2);
  std::set<std::size_t> sizes{sis[0].size(), sis[1].size()};
  CHECK(sizes == std::set<std::size_t>{2, 3});
}

}

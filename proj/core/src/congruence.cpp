#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "biheyt/error.hpp"
#include "biheyt/morphisms.hpp"

namespace biheyt {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }
  std::vector<Element> labels() {
    std::vector<Element> out(parent_.size());
    for (Element i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<Element> parent_;
};

bool congruence_order(const Congruence& a, const Congruence& b) {
  if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
  return a.blocks() < b.blocks();
}

}  // namespace

Congruence::Congruence(std::vector<Element> block_of) : block_(std::move(block_of)) {
  std::map<Element, Element> renumber;
  for (Element& b : block_) {
    auto [it, inserted] = renumber.emplace(b, static_cast<Element>(renumber.size()));
    b = it->second;
  }
  num_blocks_ = renumber.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), Element{0});
  return Congruence(std::move(b));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out(num_blocks_);
  for (Element x = 0; x < block_.size(); ++x) out[block_[x]].push_back(x);
  return out;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "congruences on different carriers");
  std::map<std::pair<Element, Element>, Element> ids;
  std::vector<Element> out(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto [it, inserted] = ids.emplace(std::make_pair(a.block(x), b.block(x)), static_cast<Element>(ids.size()));
    out[x] = it->second;
  }
  return Congruence(std::move(out));
}

Congruence join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "congruences on different carriers");
  UnionFind uf(a.size());
  std::vector<Element> first_a(a.num_blocks(), std::numeric_limits<Element>::max());
  std::vector<Element> first_b(b.num_blocks(), std::numeric_limits<Element>::max());
  for (Element x = 0; x < a.size(); ++x) {
    if (first_a[a.block(x)] == std::numeric_limits<Element>::max()) first_a[a.block(x)] = x;
    else uf.unite(first_a[a.block(x)], x);
    if (first_b[b.block(x)] == std::numeric_limits<Element>::max()) first_b[b.block(x)] = x;
    else uf.unite(first_b[b.block(x)], x);
  }
  return Congruence(uf.labels());
}

bool refines(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> target(a.num_blocks(), std::numeric_limits<Element>::max());
  for (Element x = 0; x < a.size(); ++x) {
    Element& t = target[a.block(x)];
    if (t == std::numeric_limits<Element>::max()) t = b.block(x);
    else if (t != b.block(x)) return false;
  }
  return true;
}

bool is_congruence(const BiHeytingAlgebra& a, const Congruence& c) {
  if (c.size() != a.size()) return false;
  const auto classes = c.classes();
  for (const auto& cls : classes)
    for (std::size_t i = 1; i < cls.size(); ++i) {
      // Checking each member against the block's least one suffices:
      // relatedness is transitive.
      const Element x = cls.front(), y = cls[i];
      for (Operation op : kOperations)
        for (Element z = 0; z < a.size(); ++z) {
          if (!c.related(a.apply(op, x, z), a.apply(op, y, z))) return false;
          if (!c.related(a.apply(op, z, x), a.apply(op, z, y))) return false;
        }
    }
  return true;
}

Congruence congruence_generated(const BiHeytingAlgebra& a,
                                std::span<const std::pair<Element, Element>> pairs) {
  // Worklist of pairs that caused a merge; the equivalence closure of those
  // pairs, closed under every basic translation of each, is compatible.
  UnionFind uf(a.size());
  std::vector<std::pair<Element, Element>> work;
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) throw Error(ErrorKind::InvalidArgument, "pair element out of range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (Operation op : kOperations)
      for (Element z = 0; z < a.size(); ++z) {
        const Element l1 = a.apply(op, x, z), r1 = a.apply(op, y, z);
        if (uf.unite(l1, r1)) work.emplace_back(l1, r1);
        const Element l2 = a.apply(op, z, x), r2 = a.apply(op, z, y);
        if (uf.unite(l2, r2)) work.emplace_back(l2, r2);
      }
  }
  return Congruence(uf.labels());
}

Congruence principal_congruence(const BiHeytingAlgebra& a, Element x, Element y) {
  const std::pair<Element, Element> p{x, y};
  return congruence_generated(a, std::span(&p, 1));
}

std::vector<Congruence> congruences(const BiHeytingAlgebra& a, const Budget& budget) {
  SearchMeter meter(budget.search_nodes, "congruence enumeration");
  std::vector<Congruence> principal;
  {
    std::set<std::vector<Element>> seen;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = x + 1; y < a.size(); ++y) {
        meter.tick();
        Congruence c = principal_congruence(a, x, y);
        if (seen.insert(c.blocks()).second) principal.push_back(std::move(c));
      }
  }
  std::set<std::vector<Element>> seen;
  std::vector<Congruence> all{Congruence::identity(a.size())};
  seen.insert(all.front().blocks());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const Congruence& p : principal) {
      meter.tick();
      Congruence c = join(all[i], p);
      if (seen.insert(c.blocks()).second) all.push_back(std::move(c));
    }
  std::sort(all.begin(), all.end(), congruence_order);
  return all;
}

SubdirectIrreducibility is_subdirectly_irreducible(const BiHeytingAlgebra& a) {
  if (a.is_degenerate())
    throw Error(ErrorKind::DegenerateAlgebra, "subdirect irreducibility of the one-element algebra");
  Congruence monolith = Congruence::total(a.size());
  for (Element x = 0; x < a.size() && !monolith.is_identity(); ++x)
    for (Element y = x + 1; y < a.size() && !monolith.is_identity(); ++y)
      monolith = meet(monolith, principal_congruence(a, x, y));
  if (monolith.is_identity()) return {false, std::nullopt};
  return {true, std::move(monolith)};
}

BiHeytingAlgebra quotient(const BiHeytingAlgebra& a, const Congruence& c) {
  if (!is_congruence(a, c))
    throw Error(ErrorKind::InvalidCongruence, "partition is not a congruence of the algebra");
  const std::size_t n = c.num_blocks();
  std::vector<Element> rep(n, std::numeric_limits<Element>::max());
  for (Element x = 0; x < a.size(); ++x)
    if (rep[c.block(x)] == std::numeric_limits<Element>::max()) rep[c.block(x)] = x;

  OperationTables t;
  t.size = n;
  t.bot = c.block(a.bot());
  t.top = c.block(a.top());
  for (Operation op : kOperations) {
    std::vector<Element> table(n * n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) table[i * n + j] = c.block(a.apply(op, rep[i], rep[j]));
    switch (op) {
      case Operation::Meet: t.meet = std::move(table); break;
      case Operation::Join: t.join = std::move(table); break;
      case Operation::Imp: t.imp = std::move(table); break;
      case Operation::Coimp: t.coimp = std::move(table); break;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element r : rep) labels.push_back("[" + a.label(r) + "]");
  return BiHeytingAlgebra::from_tables(std::move(t), std::move(labels));
}

Morphism natural_map(const Congruence& c) { return Morphism{c.blocks()}; }

std::optional<Section> find_section(const BiHeytingAlgebra& a, const BiHeytingAlgebra& target,
                                    const Budget& budget) {
  for (const ElementSet& sub : subalgebras(a, budget)) {
    if (sub.count() < target.size()) continue;
    const Subalgebra s = subalgebra(a, sub);
    for (const Congruence& c : congruences(s.algebra, budget)) {
      if (c.num_blocks() != target.size()) continue;
      if (is_isomorphic(quotient(s.algebra, c), target, budget)) return Section{sub, c};
    }
  }
  return std::nullopt;
}

std::vector<BiHeytingAlgebra> si_sections(const BiHeytingAlgebra& a, const Budget& budget) {
  std::vector<BiHeytingAlgebra> found;
  for (const ElementSet& sub : subalgebras(a, budget)) {
    const Subalgebra s = subalgebra(a, sub);
    for (const Congruence& c : congruences(s.algebra, budget)) {
      if (c.is_total()) continue;
      BiHeytingAlgebra q = quotient(s.algebra, c);
      if (!is_subdirectly_irreducible(q).irreducible) continue;
      const bool known = std::any_of(found.begin(), found.end(),
                                     [&](const BiHeytingAlgebra& f) { return is_isomorphic(f, q, budget).has_value(); });
      if (!known) found.push_back(std::move(q));
    }
  }
  return found;
}

}  // namespace biheyt

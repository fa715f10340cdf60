#include "biheyt/duality.hpp"

#include <map>

#include "biheyt/error.hpp"

namespace biheyt {

BiHeytingAlgebra upset_algebra(const Poset& p) {
  const std::vector<ElementSet> carrier = upsets(p);
  const std::size_t n = carrier.size();
  std::map<ElementSet, Element> index;
  for (Element i = 0; i < n; ++i) index.emplace(carrier[i], i);
  auto find = [&](const ElementSet& s) { return index.at(s); };

  OperationTables t;
  t.size = n;
  t.bot = find(ElementSet(p.size()));
  t.top = find(~ElementSet(p.size()));
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.imp.resize(n * n);
  t.coimp.resize(n * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const ElementSet& U = carrier[u];
      const ElementSet& V = carrier[v];
      const ElementSet diff = U - V;
      t.meet[u * n + v] = find(U & V);
      t.join[u * n + v] = find(U | V);
      t.imp[u * n + v] = find(~down_closure(p, diff));
      t.coimp[u * n + v] = find(up_closure(p, diff));
    }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const ElementSet& s : carrier) {
    std::string text = "{";
    bool first = true;
    for (Element e : members(s)) {
      if (!first) text += ",";
      text += p.label(e);
      first = false;
    }
    labels.push_back(text + "}");
  }
  return BiHeytingAlgebra::from_tables(std::move(t), std::move(labels));
}

std::vector<Element> join_irreducibles(const BiHeytingAlgebra& a) {
  // j is join-irreducible iff j != 0 and the join of everything strictly
  // below j is still strictly below j.
  std::vector<Element> out;
  for (Element j = 0; j < a.size(); ++j) {
    if (j == a.bot()) continue;
    Element below = a.bot();
    for (Element x = 0; x < a.size(); ++x)
      if (x != j && a.leq(x, j)) below = a.join(below, x);
    if (below != j) out.push_back(j);
  }
  return out;
}

Poset dual_poset(const BiHeytingAlgebra& a) {
  if (a.is_degenerate()) throw Error(ErrorKind::DegenerateAlgebra, "dual_poset of the one-element algebra");
  const std::vector<Element> points = join_irreducibles(a);
  Poset p(points.size());
  for (Element i = 0; i < points.size(); ++i)
    for (Element k = 0; k < points.size(); ++k) p.set_leq(i, k, a.leq(points[k], points[i]));
  if (!a.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(points.size());
    for (Element j : points) labels.push_back(a.label(j));
    p.set_labels(std::move(labels));
  }
  return p;
}

Representation representation_iso(const BiHeytingAlgebra& a) {
  if (a.is_degenerate())
    throw Error(ErrorKind::DegenerateAlgebra, "representation_iso of the one-element algebra");
  const std::vector<Element> points = join_irreducibles(a);
  Poset dual = dual_poset(a);
  BiHeytingAlgebra ups = upset_algebra(dual);

  std::map<ElementSet, Element> index;
  {
    const auto carrier = upsets(dual);
    for (Element i = 0; i < carrier.size(); ++i) index.emplace(carrier[i], i);
  }

  std::vector<Element> map(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    ElementSet below(points.size());
    for (Element i = 0; i < points.size(); ++i)
      if (a.leq(points[i], x)) below.set(i);
    auto it = index.find(below);
    if (it == index.end())
      throw Error(ErrorKind::VerificationFailure,
                  "representation of element " + std::to_string(x) + " is not an up-set");
    map[x] = it->second;
  }

  if (ups.size() != a.size())
    throw Error(ErrorKind::VerificationFailure, "dual up-set algebra has a different size");
  std::vector<bool> hit(a.size(), false);
  for (Element y : map) {
    if (hit[y]) throw Error(ErrorKind::VerificationFailure, "representation map is not injective");
    hit[y] = true;
  }
  if (map[a.bot()] != ups.bot() || map[a.top()] != ups.top())
    throw Error(ErrorKind::VerificationFailure, "representation map does not preserve bounds");
  for (Operation op : kOperations)
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (map[a.apply(op, x, y)] != ups.apply(op, map[x], map[y]))
          throw Error(ErrorKind::VerificationFailure,
                      "representation map does not preserve " + std::string(to_string(op)));
  return {std::move(dual), std::move(ups), std::move(map)};
}

std::vector<BiHeytingAlgebra> upset_algebras_times_two(std::size_t max_size) {
  const BiHeytingAlgebra two = chain_algebra(2);
  std::vector<BiHeytingAlgebra> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const Poset& p : enumerate_posets(n, max_size)) out.push_back(product(upset_algebra(p), two));
  return out;
}

}  // namespace biheyt

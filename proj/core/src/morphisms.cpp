#include "biheyt/morphisms.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "biheyt/error.hpp"

namespace biheyt {

namespace {

constexpr Element kUnassigned = std::numeric_limits<Element>::max();

class HomomorphismSearch {
 public:
  HomomorphismSearch(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target, bool injective,
                     bool first_only, const Budget& budget)
      : source_(source),
        target_(target),
        injective_(injective),
        first_only_(first_only),
        meter_(budget.search_nodes, "homomorphism search"),
        image_(source.size(), kUnassigned),
        owner_(target.size(), kUnassigned) {}

  std::vector<Morphism> run() {
    if (injective_ && source_.size() > target_.size()) return {};
    if (assign(source_.bot(), target_.bot()) && assign(source_.top(), target_.top())) search(0);
    return std::move(found_);
  }

 private:
  // Assigns x |-> v and everything it forces; false on a contradiction. The
  // caller undoes partial work through the trail.
  bool assign(Element x, Element v) {
    meter_.tick();
    pending_.clear();
    pending_.emplace_back(x, v);
    while (!pending_.empty()) {
      auto [s, t] = pending_.back();
      pending_.pop_back();
      if (image_[s] != kUnassigned) {
        if (image_[s] != t) return false;
        continue;
      }
      if (injective_ && owner_[t] != kUnassigned) return false;
      image_[s] = t;
      owner_[t] = s;
      trail_.push_back(s);
      const std::size_t assigned = trail_.size();
      for (std::size_t k = 0; k < assigned; ++k) {
        const Element y = trail_[k];
        const Element ty = image_[y];
        for (Operation op : kOperations) {
          if (!require(source_.apply(op, s, y), target_.apply(op, t, ty))) return false;
          if (!require(source_.apply(op, y, s), target_.apply(op, ty, t))) return false;
        }
      }
    }
    return true;
  }

  bool require(Element s, Element t) {
    if (image_[s] == kUnassigned) {
      pending_.emplace_back(s, t);
      return true;
    }
    return image_[s] == t;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element s = trail_.back();
      trail_.pop_back();
      owner_[image_[s]] = kUnassigned;
      image_[s] = kUnassigned;
    }
  }

  // Values are tried in ascending order at the least unassigned element, and
  // all smaller elements are fixed before branching, so leaves appear in
  // lexicographic order of the map.
  void search(Element from) {
    if (first_only_ && !found_.empty()) return;
    while (from < source_.size() && image_[from] != kUnassigned) ++from;
    if (from == source_.size()) {
      found_.push_back(Morphism{image_});
      return;
    }
    for (Element v = 0; v < target_.size(); ++v) {
      if (injective_ && owner_[v] != kUnassigned) continue;
      const std::size_t mark = trail_.size();
      if (assign(from, v)) search(from + 1);
      undo(mark);
      if (first_only_ && !found_.empty()) return;
    }
  }

  const BiHeytingAlgebra& source_;
  const BiHeytingAlgebra& target_;
  bool injective_;
  bool first_only_;
  SearchMeter meter_;
  std::vector<Element> image_;
  std::vector<Element> owner_;
  std::vector<Element> trail_;
  std::vector<std::pair<Element, Element>> pending_;
  std::vector<Morphism> found_;
};

}  // namespace

bool is_homomorphism(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                     std::span<const Element> map) {
  if (map.size() != source.size()) return false;
  for (Element y : map)
    if (y >= target.size()) return false;
  if (map[source.bot()] != target.bot() || map[source.top()] != target.top()) return false;
  for (Operation op : kOperations)
    for (Element x = 0; x < source.size(); ++x)
      for (Element y = 0; y < source.size(); ++y)
        if (map[source.apply(op, x, y)] != target.apply(op, map[x], map[y])) return false;
  return true;
}

bool is_injective(std::span<const Element> map) {
  std::vector<Element> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Morphism> homomorphisms(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                                    const Budget& budget) {
  return HomomorphismSearch(source, target, false, false, budget).run();
}

std::vector<Morphism> embeddings(const BiHeytingAlgebra& source, const BiHeytingAlgebra& target,
                                 const Budget& budget) {
  return HomomorphismSearch(source, target, true, false, budget).run();
}

std::optional<Morphism> is_isomorphic(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b,
                                      const Budget& budget) {
  if (a.size() != b.size()) return std::nullopt;
  auto found = HomomorphismSearch(a, b, true, true, budget).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

ElementSet generated_subalgebra(const BiHeytingAlgebra& a, const ElementSet& seed) {
  if (seed.size() != a.size())
    throw Error(ErrorKind::InvalidArgument, "seed set does not match carrier size");
  ElementSet in(a.size());
  std::vector<Element> list;
  auto add = [&](Element e) {
    if (!in.test(e)) {
      in.set(e);
      list.push_back(e);
    }
  };
  add(a.bot());
  add(a.top());
  for (Element e : members(seed)) add(e);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (Operation op : kOperations) {
        add(a.apply(op, list[j], list[k]));
        add(a.apply(op, list[k], list[j]));
      }
  return in;
}

bool is_subuniverse(const BiHeytingAlgebra& a, const ElementSet& s) {
  if (s.size() != a.size() || !s.test(a.bot()) || !s.test(a.top())) return false;
  const auto elems = members(s);
  for (Operation op : kOperations)
    for (Element x : elems)
      for (Element y : elems)
        if (!s.test(a.apply(op, x, y))) return false;
  return true;
}

std::vector<ElementSet> subalgebras(const BiHeytingAlgebra& a, const Budget& budget) {
  SearchMeter meter(budget.search_nodes, "subalgebra enumeration");
  // Every subuniverse is reached from the least one by adding one element at
  // a time and closing.
  std::set<ElementSet> seen;
  std::vector<ElementSet> queue{generated_subalgebra(a, ElementSet(a.size()))};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementSet current = queue[i];
    for (Element x = 0; x < a.size(); ++x) {
      if (current.test(x)) continue;
      meter.tick();
      ElementSet seed = current;
      seed.set(x);
      ElementSet closed = generated_subalgebra(a, seed);
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::sort(queue.begin(), queue.end(), canonical_less);
  return queue;
}

Subalgebra subalgebra(const BiHeytingAlgebra& a, const ElementSet& s) {
  if (!is_subuniverse(a, s))
    throw Error(ErrorKind::InvalidArgument, "element set " + to_string(s) + " is not a subuniverse");
  const std::vector<Element> inclusion = members(s);
  std::vector<Element> local(a.size(), kUnassigned);
  for (Element i = 0; i < inclusion.size(); ++i) local[inclusion[i]] = i;

  const std::size_t n = inclusion.size();
  OperationTables t;
  t.size = n;
  t.bot = local[a.bot()];
  t.top = local[a.top()];
  for (Operation op : kOperations) {
    std::vector<Element> table(n * n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) table[i * n + j] = local[a.apply(op, inclusion[i], inclusion[j])];
    switch (op) {
      case Operation::Meet: t.meet = std::move(table); break;
      case Operation::Join: t.join = std::move(table); break;
      case Operation::Imp: t.imp = std::move(table); break;
      case Operation::Coimp: t.coimp = std::move(table); break;
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (Element e : inclusion) labels.push_back(a.label(e));
  return {BiHeytingAlgebra::from_tables(std::move(t), std::move(labels)), inclusion};
}

PowerMembership embeds_in_power(const BiHeytingAlgebra& b, const BiHeytingAlgebra& f,
                                const Budget& budget) {
  PowerMembership out;
  out.homomorphisms = homomorphisms(b, f, budget);
  for (Element x = 0; x < b.size(); ++x)
    for (Element y = x + 1; y < b.size(); ++y) {
      const auto it = std::find_if(out.homomorphisms.begin(), out.homomorphisms.end(),
                                   [&](const Morphism& h) { return h(x) != h(y); });
      if (it == out.homomorphisms.end()) {
        out.member = false;
        out.certificate.clear();
        out.unseparated = std::make_pair(x, y);
        return out;
      }
      out.certificate.push_back(
          {x, y, static_cast<std::size_t>(std::distance(out.homomorphisms.begin(), it))});
    }
  out.member = true;
  return out;
}

std::vector<std::vector<Element>> power_embedding(const BiHeytingAlgebra& b,
                                                  const PowerMembership& membership) {
  if (!membership.member)
    throw Error(ErrorKind::InvalidArgument, "no embedding: some pair is not separated");
  std::vector<std::vector<Element>> tuples(b.size());
  for (Element x = 0; x < b.size(); ++x) {
    tuples[x].reserve(membership.certificate.size());
    for (const auto& w : membership.certificate) tuples[x].push_back(membership.homomorphisms[w.hom](x));
  }
  return tuples;
}

}  // namespace biheyt

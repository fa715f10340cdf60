#include "biheyt/poset.hpp"

#include <algorithm>
#include <numeric>

#include "biheyt/error.hpp"

namespace biheyt {

namespace {

void require_same_universe(const Poset& p, const ElementSet& s) {
  if (s.size() != p.size())
    throw Error(ErrorKind::InvalidArgument,
                "element set over " + std::to_string(s.size()) +
                    " elements used with a poset of size " + std::to_string(p.size()));
}

// Packs the relabelled relation row-major, first cell most significant, so
// that integer order equals lexicographic order on tables.
std::uint64_t pack_relabelled(const Poset& p, const std::vector<Element>& perm) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      code = (code << 1) | (p.leq(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

Poset unpack(std::size_t n, std::uint64_t code) {
  Poset out(n);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > 0;) {
      out.set_leq(static_cast<Element>(i), static_cast<Element>(j), code & 1u);
      code >>= 1;
    }
  return out;
}

std::uint64_t canonical_code(const Poset& p) {
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, pack_relabelled(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Poset::Poset(std::size_t size) : size_(size), rel_(size * size, 0) {
  for (std::size_t i = 0; i < size; ++i) rel_[i * size + i] = 1;
}

Poset::Poset(const std::vector<std::vector<bool>>& leq) : size_(leq.size()), rel_(size_ * size_, 0) {
  for (std::size_t i = 0; i < size_; ++i) {
    if (leq[i].size() != size_)
      throw Error(ErrorKind::InvalidArgument, "order table row " + std::to_string(i) +
                                                  " has length " + std::to_string(leq[i].size()) +
                                                  ", expected " + std::to_string(size_));
    for (std::size_t j = 0; j < size_; ++j) rel_[i * size_ + j] = leq[i][j] ? 1 : 0;
  }
}

std::vector<std::vector<bool>> Poset::table() const {
  std::vector<std::vector<bool>> out(size_, std::vector<bool>(size_));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out[i][j] = rel_[i * size_ + j] != 0;
  return out;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size_)
    throw Error(ErrorKind::InvalidArgument, "label count does not match poset size");
  labels_ = std::move(labels);
}

std::string Poset::label(Element i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::string PosetViolation::describe() const {
  switch (axiom) {
    case PosetAxiom::Reflexivity:
      return "reflexivity fails at " + std::to_string(i);
    case PosetAxiom::Antisymmetry:
      return "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case PosetAxiom::Transitivity:
      return "transitivity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
             std::to_string(k) + ")";
  }
  return "unknown violation";
}

std::optional<PosetViolation> validate_poset(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  for (Element i = 0; i < n; ++i)
    if (!p.leq(i, i)) return PosetViolation{PosetAxiom::Reflexivity, i};
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) return PosetViolation{PosetAxiom::Antisymmetry, i, j};
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      for (Element k = 0; k < n; ++k)
        if (p.leq(j, k) && !p.leq(i, k)) return PosetViolation{PosetAxiom::Transitivity, i, j, k};
    }
  return std::nullopt;
}

void require_valid(const Poset& p) {
  if (auto v = validate_poset(p)) throw Error(ErrorKind::InvalidArgument, "not a poset: " + v->describe());
}

Poset chain_poset(std::size_t n) {
  Poset p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p.set_leq(static_cast<Element>(i), static_cast<Element>(j));
  return p;
}

Poset antichain_poset(std::size_t n) { return Poset(n); }

ElementSet up_closure(const Poset& p, const ElementSet& s) {
  require_same_universe(p, s);
  ElementSet out(p.size());
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(static_cast<Element>(x), static_cast<Element>(y))) out.set(y);
  return out;
}

ElementSet down_closure(const Poset& p, const ElementSet& s) {
  require_same_universe(p, s);
  ElementSet out(p.size());
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(static_cast<Element>(y), static_cast<Element>(x))) out.set(y);
  return out;
}

bool is_upset(const Poset& p, const ElementSet& s) { return up_closure(p, s) == s; }

std::vector<ElementSet> upsets(const Poset& p) {
  require_valid(p);
  const std::size_t n = p.size();
  std::vector<ElementSet> out;
  // Each element is decided in turn; putting x in forces everything above it
  // in, leaving it out forces everything below it out. Decisions never
  // conflict, so every leaf is an up-set and each up-set is reached once.
  ElementSet in(n), out_set(n);
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    while (next < n && (in.test(next) || out_set.test(next))) ++next;
    if (next == n) {
      out.push_back(in);
      return;
    }
    const ElementSet saved_in = in, saved_out = out_set;
    in |= up_closure(p, make_set(n, {static_cast<Element>(next)}));
    self(self, next + 1);
    in = saved_in;
    out_set |= down_closure(p, make_set(n, {static_cast<Element>(next)}));
    self(self, next + 1);
    out_set = saved_out;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() + q.size();
  Poset out(n);
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < p.size(); ++j) out.set_leq(i, j, p.leq(i, j));
  const auto shift = static_cast<Element>(p.size());
  for (Element i = 0; i < q.size(); ++i)
    for (Element j = 0; j < q.size(); ++j) out.set_leq(shift + i, shift + j, q.leq(i, j));
  if (!p.labels().empty() || !q.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Element i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
    for (Element i = 0; i < q.size(); ++i) labels.push_back(q.label(i));
    out.set_labels(std::move(labels));
  }
  return out;
}

std::optional<std::vector<Element>> poset_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;

  // Cheap invariant: per-element (down-degree, up-degree) multisets agree.
  auto degrees = [](const Poset& r) {
    std::vector<std::pair<std::size_t, std::size_t>> d(r.size());
    for (Element i = 0; i < r.size(); ++i)
      for (Element j = 0; j < r.size(); ++j) {
        if (r.leq(j, i)) ++d[i].first;
        if (r.leq(i, j)) ++d[i].second;
      }
    return d;
  };
  const auto dp = degrees(p), dq = degrees(q);
  {
    auto sp = dp, sq = dq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  std::vector<Element> image(n);
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, Element i) -> bool {
    if (i == n) return true;
    for (Element v = 0; v < n; ++v) {
      if (used[v] || dp[i] != dq[v]) continue;
      bool ok = true;
      for (Element k = 0; k < i && ok; ++k)
        ok = p.leq(i, k) == q.leq(v, image[k]) && p.leq(k, i) == q.leq(image[k], v);
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return image;
}

std::vector<std::pair<Element, Element>> hasse_edges(const Poset& p) {
  std::vector<std::pair<Element, Element>> edges;
  const auto n = static_cast<Element>(p.size());
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool covers = true;
      for (Element k = 0; k < n && covers; ++k)
        if (p.less(i, k) && p.less(k, j)) covers = false;
      if (covers) edges.emplace_back(i, j);
    }
  return edges;
}

Poset canonical_form(const Poset& p) {
  if (p.size() > 8)
    throw Error(ErrorKind::InvalidArgument, "canonical_form supports at most 8 elements");
  return unpack(p.size(), canonical_code(p));
}

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t max_size) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "enumerate_posets requires n >= 1");
  if (n > max_size || n > 8)
    throw BudgetExceeded("enumerate_posets(" + std::to_string(n) + ") is above the size cap of " +
                         std::to_string(std::min<std::size_t>(max_size, 8)));

  // Every poset arises from a smaller one by adding a maximal element above
  // some down-set, so growing class representatives one element at a time and
  // deduplicating by canonical code reaches every class.
  std::vector<std::uint64_t> level{canonical_code(Poset(1))};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Poset base = unpack(size - 1, code);
      for (const ElementSet& up : upsets(base)) {
        // Complement of an up-set is a down-set; enumerate each exactly once.
        ElementSet down = ~up;
        Poset grown(size);
        for (Element i = 0; i + 1 < size; ++i)
          for (Element j = 0; j + 1 < size; ++j) grown.set_leq(i, j, base.leq(i, j));
        const auto top = static_cast<Element>(size - 1);
        for (Element d : members(down)) grown.set_leq(d, top);
        next.push_back(canonical_code(grown));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  std::vector<Poset> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(unpack(n, code));
  return out;
}

}  // namespace biheyt

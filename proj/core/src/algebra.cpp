#include "biheyt/algebra.hpp"

#include "biheyt/error.hpp"

namespace biheyt {

std::string_view to_string(Operation op) noexcept {
  switch (op) {
    case Operation::Meet: return "meet";
    case Operation::Join: return "join";
    case Operation::Imp: return "imp";
    case Operation::Coimp: return "coimp";
  }
  return "?";
}

namespace {

// Greatest element of `candidates` w.r.t. p, if it is above all of them.
std::optional<Element> greatest(const Poset& p, const std::vector<Element>& candidates) {
  for (Element g : candidates) {
    bool above_all = true;
    for (Element c : candidates)
      if (!p.leq(c, g)) {
        above_all = false;
        break;
      }
    if (above_all) return g;
  }
  return std::nullopt;
}

std::optional<Element> least(const Poset& p, const std::vector<Element>& candidates) {
  for (Element g : candidates) {
    bool below_all = true;
    for (Element c : candidates)
      if (!p.leq(g, c)) {
        below_all = false;
        break;
      }
    if (below_all) return g;
  }
  return std::nullopt;
}

std::string pair_text(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

BiHeytingAlgebra BiHeytingAlgebra::from_lattice_order(const Poset& order, Element bot, Element top) {
  require_valid(order);
  const std::size_t n = order.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a lattice needs at least one element");
  if (bot >= n || top >= n) throw Error(ErrorKind::InvalidArgument, "bot/top index out of range");
  for (Element x = 0; x < n; ++x) {
    if (!order.leq(bot, x)) throw Error(ErrorKind::InvalidArgument, "bot is not the least element");
    if (!order.leq(x, top)) throw Error(ErrorKind::InvalidArgument, "top is not the greatest element");
  }

  OperationTables t;
  t.size = n;
  t.bot = bot;
  t.top = top;
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.imp.resize(n * n);
  t.coimp.resize(n * n);

  std::vector<Element> bounds;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (order.leq(c, a) && order.leq(c, b)) bounds.push_back(c);
      auto g = greatest(order, bounds);
      if (!g) throw Error(ErrorKind::NotALattice, "no meet for " + pair_text(a, b));
      t.meet[a * n + b] = *g;

      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (order.leq(a, c) && order.leq(b, c)) bounds.push_back(c);
      auto l = least(order, bounds);
      if (!l) throw Error(ErrorKind::NotALattice, "no join for " + pair_text(a, b));
      t.join[a * n + b] = *l;
    }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element lhs = t.meet[a * n + t.join[b * n + c]];
        const Element rhs = t.join[t.meet[a * n + b] * n + t.meet[a * n + c]];
        if (lhs != rhs)
          throw Error(ErrorKind::NotDistributive,
                      "meet(" + std::to_string(a) + ", join" + pair_text(b, c) + ") differs");
      }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (order.leq(t.meet[a * n + c], b)) bounds.push_back(c);
      auto g = greatest(order, bounds);
      if (!g) throw Error(ErrorKind::ResiduationFailure, "no implication for " + pair_text(a, b));
      t.imp[a * n + b] = *g;

      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (order.leq(a, t.join[b * n + c])) bounds.push_back(c);
      auto l = least(order, bounds);
      if (!l) throw Error(ErrorKind::ResiduationFailure, "no co-implication for " + pair_text(a, b));
      t.coimp[a * n + b] = *l;
    }

  auto algebra = from_tables(std::move(t), order.labels());
  if (auto failure = check_invariants(algebra))
    throw Error(ErrorKind::VerificationFailure, "constructed algebra is invalid: " + *failure);
  return algebra;
}

BiHeytingAlgebra BiHeytingAlgebra::from_tables(OperationTables tables, std::vector<std::string> labels) {
  const std::size_t n = tables.size;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "algebra carrier must be non-empty");
  for (const auto* table : {&tables.meet, &tables.join, &tables.imp, &tables.coimp})
    if (table->size() != n * n) throw Error(ErrorKind::InvalidArgument, "operation table has wrong size");
  if (tables.bot >= n || tables.top >= n) throw Error(ErrorKind::InvalidArgument, "bot/top out of range");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::InvalidArgument, "label count does not match carrier size");
  BiHeytingAlgebra a;
  a.tables_ = std::move(tables);
  a.labels_ = std::move(labels);
  return a;
}

BiHeytingAlgebra BiHeytingAlgebra::degenerate() {
  OperationTables t;
  t.size = 1;
  t.meet = t.join = t.imp = t.coimp = {0};
  return from_tables(std::move(t), {"*"});
}

const std::vector<Element>& BiHeytingAlgebra::table(Operation op) const {
  switch (op) {
    case Operation::Meet: return tables_.meet;
    case Operation::Join: return tables_.join;
    case Operation::Imp: return tables_.imp;
    case Operation::Coimp: return tables_.coimp;
  }
  return tables_.meet;
}

Poset BiHeytingAlgebra::order() const {
  Poset p(size());
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b) p.set_leq(a, b, leq(a, b));
  if (!labels_.empty()) p.set_labels(labels_);
  return p;
}

std::string BiHeytingAlgebra::label(Element e) const {
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

std::optional<std::string> check_invariants(const BiHeytingAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Operation op : kOperations)
    for (Element v : a.table(op))
      if (v >= n) return std::string(to_string(op)) + " table has an out-of-range entry";

  for (Element x = 0; x < n; ++x) {
    if (a.meet(x, x) != x || a.join(x, x) != x) return "idempotence fails at " + std::to_string(x);
    if (a.meet(x, a.bot()) != a.bot() || a.join(x, a.top()) != a.top())
      return "bounds fail at " + std::to_string(x);
    for (Element y = 0; y < n; ++y) {
      if (a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x))
        return "commutativity fails at " + pair_text(x, y);
      if (a.meet(x, a.join(x, y)) != x || a.join(x, a.meet(x, y)) != x)
        return "absorption fails at " + pair_text(x, y);
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (a.meet(x, a.meet(y, z)) != a.meet(a.meet(x, y), z) ||
            a.join(x, a.join(y, z)) != a.join(a.join(x, y), z))
          return "associativity fails";
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) return "distributivity fails";
        // meet(x,z) <= y  iff  z <= imp(x,y)
        if (a.leq(a.meet(x, z), y) != a.leq(z, a.imp(x, y)))
          return "residuation fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z) + ")";
        // x <= join(y,z)  iff  coimp(x,y) <= z
        if (a.leq(x, a.join(y, z)) != a.leq(a.coimp(x, y), z))
          return "co-residuation fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z) + ")";
      }
  return std::nullopt;
}

BiHeytingAlgebra chain_algebra(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "chain_algebra needs n >= 2, got " + std::to_string(n));
  Poset order = chain_poset(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  labels.emplace_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("a" + std::to_string(i));
  labels.emplace_back("1");
  order.set_labels(std::move(labels));
  return BiHeytingAlgebra::from_lattice_order(order, 0, static_cast<Element>(n - 1));
}

BiHeytingAlgebra product(const BiHeytingAlgebra& a, const BiHeytingAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto index = [nb](Element x, Element y) { return static_cast<Element>(x * nb + y); };
  OperationTables t;
  t.size = n;
  t.bot = index(a.bot(), b.bot());
  t.top = index(a.top(), b.top());
  for (Operation op : kOperations) {
    std::vector<Element> table(n * n);
    for (Element x1 = 0; x1 < na; ++x1)
      for (Element y1 = 0; y1 < nb; ++y1)
        for (Element x2 = 0; x2 < na; ++x2)
          for (Element y2 = 0; y2 < nb; ++y2)
            table[index(x1, y1) * n + index(x2, y2)] = index(a.apply(op, x1, x2), b.apply(op, y1, y2));
    switch (op) {
      case Operation::Meet: t.meet = std::move(table); break;
      case Operation::Join: t.join = std::move(table); break;
      case Operation::Imp: t.imp = std::move(table); break;
      case Operation::Coimp: t.coimp = std::move(table); break;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return BiHeytingAlgebra::from_tables(std::move(t), std::move(labels));
}

bool is_boolean(const BiHeytingAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    if (a.join(x, a.neg(x)) != a.top()) return false;
  return true;
}

bool is_chain(const BiHeytingAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

}  // namespace biheyt

#include "biheyt/free_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "biheyt/error.hpp"

namespace biheyt {

namespace {

constexpr Element kAbsent = std::numeric_limits<Element>::max();

// Elements of the ambient product, packed as mixed-radix codes so lookup is
// a single array access.
class AmbientProduct {
 public:
  AmbientProduct(std::span<const BiHeytingAlgebra> gens, std::vector<std::size_t> owner)
      : gens_(gens), owner_(std::move(owner)) {
    std::uint64_t weight = 1;
    weights_.resize(owner_.size());
    for (std::size_t k = owner_.size(); k-- > 0;) {
      weights_[k] = weight;
      weight *= gens_[owner_[k]].size();
    }
    cardinality_ = weight;
  }

  std::uint64_t cardinality() const noexcept { return cardinality_; }
  std::size_t width() const noexcept { return owner_.size(); }

  std::uint64_t encode(std::span<const Element> coords) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) code += coords[k] * weights_[k];
    return code;
  }

  std::uint64_t apply(Operation op, std::span<const Element> x, std::span<const Element> y,
                      std::span<Element> out) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = gens_[owner_[k]].apply(op, x[k], y[k]);
      code += out[k] * weights_[k];
    }
    return code;
  }

 private:
  std::span<const BiHeytingAlgebra> gens_;
  std::vector<std::size_t> owner_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t cardinality_ = 1;
};

// Whether prod_A |A|^(|A|^n) fits under cap; reports log2 of the size.
bool ambient_within(std::span<const BiHeytingAlgebra> gens, std::size_t n, std::uint64_t cap,
                    long double& log2_size) {
  log2_size = 0;
  for (const auto& a : gens)
    log2_size += std::pow(static_cast<long double>(a.size()), static_cast<long double>(n)) *
                 std::log2(static_cast<long double>(a.size()));
  if (cap == 0) return false;
  return log2_size <= std::log2(static_cast<long double>(cap)) + 1e-9L;
}

}  // namespace

FreeAlgebra free_algebra(std::span<const BiHeytingAlgebra> gens, std::size_t n, const Budget& budget) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "free_algebra needs at least one generating algebra");

  long double log2_size = 0;
  if (!ambient_within(gens, n, budget.free_ambient, log2_size))
    throw BudgetExceeded("free algebra on " + std::to_string(n) + " generators needs an ambient product of 2^" +
                         std::to_string(static_cast<double>(log2_size)) + " elements, cap is " +
                         std::to_string(budget.free_ambient));

  std::vector<GeneratorAssignment> assignments;
  std::vector<Element> generators;
  std::vector<std::size_t> owner;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t m = gens[g].size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= m;
    for (std::size_t code = 0; code < count; ++code) {
      GeneratorAssignment asg{g, std::vector<Element>(n)};
      std::size_t rest = code;
      for (std::size_t i = n; i-- > 0;) {
        asg.values[i] = static_cast<Element>(rest % m);
        rest /= m;
      }
      assignments.push_back(std::move(asg));
      owner.push_back(g);
    }
  }

  const AmbientProduct ambient(gens, owner);
  const std::size_t width = ambient.width();
  std::vector<Element> index(ambient.cardinality(), kAbsent);
  // Element e occupies [e * width, (e + 1) * width). Capacity is reserved up
  // front so spans into it stay valid while the closure appends.
  std::vector<Element> coords;
  coords.reserve(static_cast<std::size_t>(
                     std::min<std::uint64_t>(budget.max_carrier, ambient.cardinality())) *
                 width);
  std::size_t count = 0;

  auto add = [&](std::span<const Element> c, std::uint64_t code) -> Element {
    if (index[code] != kAbsent) return index[code];
    if (count >= budget.max_carrier)
      throw BudgetExceeded("free algebra carrier grew beyond " + std::to_string(budget.max_carrier) + " elements");
    coords.insert(coords.end(), c.begin(), c.end());
    index[code] = static_cast<Element>(count);
    return static_cast<Element>(count++);
  };

  std::vector<Element> tuple(width);
  for (std::size_t k = 0; k < width; ++k) tuple[k] = gens[owner[k]].bot();
  add(tuple, ambient.encode(tuple));
  for (std::size_t k = 0; k < width; ++k) tuple[k] = gens[owner[k]].top();
  add(tuple, ambient.encode(tuple));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < width; ++k) tuple[k] = assignments[k].values[i];
    generators.push_back(add(tuple, ambient.encode(tuple)));
  }

  auto at = [&](std::size_t e) { return std::span<const Element>(coords.data() + e * width, width); };
  std::vector<Element> scratch(width);
  auto combine = [&](Operation op, std::size_t x, std::size_t y) {
    const std::uint64_t code = ambient.apply(op, at(x), at(y), scratch);
    add(scratch, code);
  };
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (Operation op : kOperations) {
        combine(op, j, k);
        combine(op, k, j);
      }

  OperationTables t;
  t.size = count;
  t.bot = 0;
  t.top = index[ambient.encode(at(1))];
  for (Operation op : kOperations) {
    std::vector<Element> table(count * count);
    for (std::size_t x = 0; x < count; ++x)
      for (std::size_t y = 0; y < count; ++y)
        table[x * count + y] = index[ambient.apply(op, at(x), at(y), scratch)];
    switch (op) {
      case Operation::Meet: t.meet = std::move(table); break;
      case Operation::Join: t.join = std::move(table); break;
      case Operation::Imp: t.imp = std::move(table); break;
      case Operation::Coimp: t.coimp = std::move(table); break;
    }
  }

  std::vector<std::string> labels;
  labels.reserve(count);
  std::vector<std::vector<Element>> coordinates;
  coordinates.reserve(count);
  for (std::size_t e = 0; e < count; ++e) {
    std::string text = "<";
    for (std::size_t k = 0; k < width; ++k) {
      if (k) text += ",";
      text += gens[owner[k]].label(at(e)[k]);
    }
    labels.push_back(text + ">");
    coordinates.emplace_back(at(e).begin(), at(e).end());
  }
  return FreeAlgebra{BiHeytingAlgebra::from_tables(std::move(t), std::move(labels)), std::move(generators),
                     std::move(assignments), std::move(coordinates)};
}

}  // namespace biheyt

#include "biheyt/element_set.hpp"

#include "biheyt/error.hpp"

namespace biheyt {

ElementSet make_set(std::size_t universe, std::initializer_list<Element> elements) {
  return make_set(universe, std::vector<Element>(elements));
}

ElementSet make_set(std::size_t universe, const std::vector<Element>& elements) {
  ElementSet s(universe);
  for (Element e : elements) {
    if (e >= universe)
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(e) + " out of range for carrier of size " +
                      std::to_string(universe));
    s.set(e);
  }
  return s;
}

std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first(), j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : members(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace biheyt

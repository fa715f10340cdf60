#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace biheyt {

// Index of an element of a finite carrier.
using Element = std::uint32_t;

// Subset of a carrier {0, ..., n-1}.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

ElementSet make_set(std::size_t universe, std::initializer_list<Element> members);
ElementSet make_set(std::size_t universe, const std::vector<Element>& members);
std::vector<Element> members(const ElementSet& s);

// Canonical order: fewer members first, then lexicographic on the sorted
// member indices.
bool canonical_less(const ElementSet& a, const ElementSet& b);

std::string to_string(const ElementSet& s);

}  // namespace biheyt

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace biheyt {

// Resource caps shared by every bounded search in the library.
struct Budget {
  // Backtracking nodes for homomorphism/subalgebra/congruence searches.
  std::uint64_t search_nodes = 50'000'000;
  // Variable assignments enumerated by a single rule evaluation.
  std::uint64_t assignments = 50'000'000;
  // Cardinality of the ambient product a free algebra is built inside.
  std::uint64_t free_ambient = std::uint64_t{1} << 24;
  // Largest carrier stored with dense operation tables.
  std::size_t max_carrier = 4096;
  // Largest n accepted by enumerate_posets.
  std::size_t max_poset_size = 6;

  // Defaults, with BIHEYT_BUDGET (a positive integer) overriding the
  // search_nodes and assignments caps.
  static Budget from_env();
};

// Counts nodes against a cap and throws BudgetExceeded once it is exhausted.
class SearchMeter {
 public:
  SearchMeter(std::uint64_t cap, std::string_view what) : cap_(cap), what_(what) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_) fail();
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  [[noreturn]] void fail() const;

  std::uint64_t cap_;
  std::uint64_t used_ = 0;
  std::string_view what_;
};

}  // namespace biheyt

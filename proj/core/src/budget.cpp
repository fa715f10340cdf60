#include "biheyt/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "biheyt/error.hpp"

namespace biheyt {

Budget Budget::from_env() {
  Budget budget;
  if (const char* raw = std::getenv("BIHEYT_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
      throw Error(ErrorKind::InvalidArgument,
                  std::string("BIHEYT_BUDGET must be a positive integer, got '") + raw + "'");
    budget.search_nodes = value;
    budget.assignments = value;
  }
  return budget;
}

void SearchMeter::fail() const {
  throw BudgetExceeded(std::string(what_) + " exceeded its budget of " +
                       std::to_string(cap_) + " nodes");
}

}  // namespace biheyt

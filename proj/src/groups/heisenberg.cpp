#include "congrowth/groups/heisenberg.hpp"

namespace congrowth::groups {

Heisenberg::Heisenberg()
    : generators_{{"x", x()}, {"x'", heis_inverse(x())}, {"y", y()}, {"y'", heis_inverse(y())}} {}

std::string to_string(const HeisenbergElement<std::int64_t>& g) {
  return "(" + std::to_string(g.k) + "," + std::to_string(g.l) + "," + std::to_string(g.m) + ")";
}

}  // namespace congrowth::groups

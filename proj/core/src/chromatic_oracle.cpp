#include <string>
#include <vector>

#include "brute_force.hpp"
#include "chromstab/chromatic.hpp"

namespace chromstab {

namespace detail {

bool brute_force_colorable(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  const auto edges = g.edges();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (const Edge& e : edges) {
      if (color[e.u] == color[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    int pos = 0;
    while (pos < n && ++color[pos] == k) color[pos++] = 0;
    if (pos == n) return false;
  }
}

int brute_force_chromatic_number(const Graph& g) {
  int k = 0;
  while (!brute_force_colorable(g, k)) ++k;
  return k;
}

}  // namespace detail

int chromatic_oracle(const Graph& g) {
  if (g.order() > kChromaticOracleMaxOrder) {
    throw PreconditionError("chromatic_oracle is limited to n <= " +
                            std::to_string(kChromaticOracleMaxOrder));
  }
  return detail::brute_force_chromatic_number(g);
}

}  // namespace chromstab

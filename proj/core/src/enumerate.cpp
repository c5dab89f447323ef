#include "chromstab/enumerate.hpp"

#include <algorithm>
#include <string>

namespace chromstab {

LabeledGraphs::LabeledGraphs(int n, int limit) : n_(n) {
  const int ceiling = std::min(limit, kMaxEnumerationOrder);
  if (n < 1 || n > ceiling) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside 1.." +
                                std::to_string(ceiling));
  }
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs_.push_back({u, v});
  }
  count_ = std::uint64_t{1} << pairs_.size();
}

Graph LabeledGraphs::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("enumeration index out of range");
  std::vector<Word> rows(static_cast<std::size_t>(n_), 0);
  for (int bit : VertexSet(index)) {
    const Edge e = pairs_[bit];
    rows[e.u] |= Word{1} << e.v;
    rows[e.v] |= Word{1} << e.u;
  }
  return Graph::from_adjacency(n_, rows);
}

}  // namespace chromstab

#include <string>

#include "brute_force.hpp"
#include "chromstab/chromatic.hpp"
#include "chromstab/stability.hpp"

namespace chromstab {

int vertex_stability_oracle(const Graph& g, bool independent_only) {
  const int n = g.order();
  if (n > kVertexOracleMaxOrder) {
    throw PreconditionError("vertex_stability_oracle is limited to n <= " +
                            std::to_string(kVertexOracleMaxOrder));
  }
  if (!g.has_edge()) throw PreconditionError("stability invariants need a graph with an edge");

  const int chi = detail::brute_force_chromatic_number(g);
  const Word subsets = Word{1} << n;
  for (int size = 1; size <= n; ++size) {
    for (Word mask = 0; mask < subsets; ++mask) {
      const VertexSet s(mask);
      if (s.size() != size) continue;
      if (independent_only && !is_independent_set(g, s)) continue;
      if (detail::brute_force_chromatic_number(delete_vertices(g, s).graph) == chi - 1) return size;
    }
  }
  throw std::logic_error("vertex_stability_oracle found no deletion set");
}

int edge_stability_oracle(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > kEdgeOracleMaxSize) {
    throw PreconditionError("edge_stability_oracle is limited to |E| <= " +
                            std::to_string(kEdgeOracleMaxSize));
  }
  if (m == 0) throw PreconditionError("stability invariants need a graph with an edge");

  const int chi = chromatic_number(g).chi;
  const Word subsets = Word{1} << m;
  std::vector<Edge> removed;
  for (int size = 1; size <= m; ++size) {
    for (Word mask = 0; mask < subsets; ++mask) {
      const VertexSet picks(mask);
      if (picks.size() != size) continue;
      removed.clear();
      for (int i : picks) removed.push_back(edges[i]);
      if (chromatic_number(delete_edges(g, removed)).chi == chi - 1) return size;
    }
  }
  throw std::logic_error("edge_stability_oracle found no deletion set");
}

}  // namespace chromstab

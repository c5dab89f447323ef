#include "chromstab/graph.hpp"

#include <algorithm>
#include <string>

namespace chromstab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::from_vector(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("edge list needs at least one vertex");
  Graph g(n);
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    const Edge e = make_edge(raw.u, raw.v);
    if (g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    g.adj_[e.u] |= Word{1} << e.v;
    g.adj_[e.v] |= Word{1} << e.u;
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const Word> rows) {
  Graph g(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("adjacency row count does not match order");
  }
  const Word mask = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) {
    const Word r = rows[v];
    if ((r & ~mask) != 0) throw std::invalid_argument("adjacency row names a missing vertex");
    if ((r >> v) & 1U) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    g.adj_[v] = r;
  }
  for (int u = 0; u < n; ++u) {
    for (int v : VertexSet(g.adj_[u])) {
      if (!g.adjacent(v, u)) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::has_edge() const {
  return std::any_of(adj_.begin(), adj_.begin() + n_, [](Word r) { return r != 0; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    const Word later = adj_[u] & ~VertexSet::first(u + 1).bits();
    for (int v : VertexSet(later)) out.push_back({u, v});
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Word> rows(static_cast<std::size_t>(n));
  const Word all = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) rows[v] = all & ~g.row(v) & ~(Word{1} << v);
  return Graph::from_adjacency(n, rows);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  InducedSubgraph out;
  out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : keep) {
    out.from_original[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  const int m = static_cast<int>(out.to_original.size());
  std::vector<Word> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int w : g.neighbors(out.to_original[i]) & keep) rows[i] |= Word{1} << out.from_original[w];
  }
  out.graph = Graph::from_adjacency(m, rows);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Word> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (const Edge& raw : removed) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.u < 0 || e.v >= g.order() || !((rows[e.u] >> e.v) & 1U)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") is not present");
    }
    rows[e.u] &= ~(Word{1} << e.v);
    rows[e.v] &= ~(Word{1} << e.u);
  }
  return Graph::from_adjacency(g.order(), rows);
}

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    const VertexSet c = component_of(g, rest.min(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && component_of(g, 0, g.vertices()) == g.vertices();
}

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != g.order() - 1) return false;
  }
  return true;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_independent_set(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

}  // namespace chromstab

#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// solvers under test.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chromstab/graph.hpp"

namespace chromstab::testing {

// Decodes graph6 by walking the bit string literally: one '0'/'1' character
// per bit, then reading pairs column by column.
inline std::vector<Edge> decode_graph6_bits(const std::string& text) {
  const int n = text[0] - 63;
  std::string bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int value = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1) ? '1' : '0');
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (bits.at(k) == '1') edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Proper k-coloring exists among all k^n color vectors of g[keep].
inline bool brute_colorable(const Graph& g, int k, VertexSet keep) {
  std::vector<int> vs = keep.to_vector();
  const int n = static_cast<int>(vs.size());
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i) color[vs[i]] = digits[i];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (g.adjacent(vs[a], vs[b]) && digits[a] == digits[b]) ok = false;
      }
    }
    if (ok) return true;
    int pos = 0;
    while (pos < n && ++digits[pos] == k) digits[pos++] = 0;
    if (pos == n) return false;
  }
}

inline int brute_chi(const Graph& g, VertexSet keep) {
  int k = 0;
  while (!brute_colorable(g, k, keep)) ++k;
  return k;
}

inline int brute_chi(const Graph& g) { return brute_chi(g, g.vertices()); }

// Minimum vertex cover by subset enumeration.
inline int brute_vertex_cover(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (Word mask = 0; mask < (Word{1} << n); ++mask) {
    const VertexSet s(mask);
    bool covers = true;
    for (const Edge& e : g.edges()) covers = covers && (s.contains(e.u) || s.contains(e.v));
    if (covers) best = std::min(best, s.size());
  }
  return best;
}

// Bipartite test by BFS 2-coloring of g[keep].
inline bool is_bipartite(const Graph& g, VertexSet keep) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s : keep) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (int w : g.neighbors(v) & keep) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Minimum odd cycle transversal by subset enumeration.
inline int brute_odd_cycle_transversal(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (Word mask = 0; mask < (Word{1} << n); ++mask) {
    const VertexSet s(mask);
    if (s.size() < best && is_bipartite(g, g.vertices() - s)) best = s.size();
  }
  return best;
}

// All size-r subsets of 0..n-1 in lexicographic order of sorted lists.
inline std::vector<std::vector<int>> lex_combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Lexicographically least vertex set of the given size whose removal leaves
// a (chi - 1)-colorable graph.
inline std::optional<std::vector<int>> brute_lex_vertex_witness(const Graph& g, int size,
                                                                bool independent) {
  const int chi = brute_chi(g);
  for (const auto& combo : lex_combinations(g.order(), size)) {
    const VertexSet s = VertexSet::from_vector(combo);
    if (independent && !is_independent_set(g, s)) continue;
    if (brute_colorable(g, chi - 1, g.vertices() - s)) return combo;
  }
  return std::nullopt;
}

inline Graph without_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    bool drop = false;
    for (const Edge& r : removed) drop = drop || r == e;
    if (!drop) keep.push_back(e);
  }
  return Graph::from_edge_list(g.order(), keep);
}

inline std::optional<std::vector<Edge>> brute_lex_edge_witness(const Graph& g, int size) {
  const int chi = brute_chi(g);
  const auto edges = g.edges();
  for (const auto& combo : lex_combinations(static_cast<int>(edges.size()), size)) {
    std::vector<Edge> removed;
    for (int i : combo) removed.push_back(edges[i]);
    const Graph h = without_edges(g, removed);
    if (brute_colorable(h, chi - 1, h.vertices())) return removed;
  }
  return std::nullopt;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, edges);
}

// Disjoint union with the second graph's vertices shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph::from_edge_list(a.order() + b.order(), edges);
}

inline bool well_formed(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (int v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
    if ((g.row(u) & ~VertexSet::first(g.order()).bits()) != 0) return false;
  }
  return true;
}

}  // namespace chromstab::testing

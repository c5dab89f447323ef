#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromstab {

/// Largest supported order. Matches the graph6 short form and lets every
/// adjacency row fit in one machine word.
inline constexpr int kMaxVertices = 62;

using Word = std::uint64_t;

/// Raised for malformed textual input (graph6, edge lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's input violates its domain, e.g. an edgeless
/// graph handed to a stability solver.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A set of vertices of some host graph, stored as a single bitset word.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  /// The set {0, ..., n-1}.
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static VertexSet from_vector(std::span<const int> vertices);

  constexpr Word bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= Word{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Word{1} << v); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  Word bits_ = 0;
};

/// Undirected edge, always normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds a normalized edge; throws std::invalid_argument on a self-loop.
Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Values are immutable once built.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops,
  /// duplicate edges or n outside 1..kMaxVertices.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric and loop-free.
  static Graph from_adjacency(int n, std::span<const Word> rows);

  int order() const { return n_; }
  int size() const;
  bool has_edge() const;

  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  Word row(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<Word, kMaxVertices> adj_{};
};

/// Result of deleting vertices: the compacted graph and the relabeling.
struct InducedSubgraph {
  Graph graph;
  /// new label -> original label
  std::vector<int> to_original;
  /// original label -> new label, -1 for deleted vertices
  std::vector<int> from_original;
};

Graph complement(const Graph& g);

/// G[V \ removed], relabeled to 0..n-|removed|-1 in increasing original order.
InducedSubgraph delete_vertices(const Graph& g, VertexSet removed);

/// G[keep], relabeled in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Same vertex set, edge set E \ removed. Throws std::invalid_argument if
/// some edge of `removed` is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

/// Components ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component of `start` inside the subgraph induced by `within`.
VertexSet component_of(const Graph& g, int start, VertexSet within);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
int max_degree(const Graph& g);
bool is_independent_set(const Graph& g, VertexSet s);

}  // namespace chromstab

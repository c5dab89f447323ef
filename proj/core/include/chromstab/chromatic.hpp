#pragma once

#include <optional>
#include <vector>

#include "chromstab/graph.hpp"

namespace chromstab {

/// Vertex coloring with colors 0..k-1. Vertices outside the colored vertex
/// set (see the masked overloads) carry kUncolored.
struct Coloring {
  static constexpr int kUncolored = -1;

  std::vector<int> colors;
  int k = 0;

  /// Color classes C_0..C_{k-1}.
  std::vector<VertexSet> classes() const;
  /// No edge between two colored vertices is monochromatic and every
  /// assigned color lies in 0..k-1.
  bool is_proper(const Graph& g) const;
  /// Number of distinct colors actually assigned.
  int colors_used() const;
};

/// Exact k-colorability by DSATUR backtracking (max saturation, then max
/// degree, then least index; at most one fresh color per branch). Components
/// are solved independently. Deterministic.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Same question for the subgraph induced by `active`; inactive vertices are
/// left uncolored in the witness.
std::optional<Coloring> is_k_colorable(const Graph& g, int k, VertexSet active);

/// Decision-only variant of the masked test; skips witness assembly.
bool k_colorable(const Graph& g, int k, VertexSet active);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number, searched upward from the greedy clique bound and
/// capped by the greedy DSATUR coloring. The witness uses exactly chi colors.
ChromaticResult chromatic_number(const Graph& g);
int chromatic_number(const Graph& g, VertexSet active);

/// Size of the best clique grown greedily from each start vertex. Always a
/// lower bound on chi.
int greedy_clique_lower_bound(const Graph& g);

/// One-pass DSATUR coloring without backtracking (an upper bound on chi).
Coloring greedy_dsatur(const Graph& g);

enum class BrooksClass { CompleteExtremal, OddCycleExtremal, NotExtremal };

/// Connected graphs with chi = Delta + 1 are exactly complete graphs and odd
/// cycles. Throws PreconditionError if g is disconnected or empty.
BrooksClass brooks_classify(const Graph& g);

/// Independent oracle: tries k = 0, 1, 2, ... and scans all k^n color
/// vectors. Throws PreconditionError for n > 8.
int chromatic_oracle(const Graph& g);

inline constexpr int kChromaticOracleMaxOrder = 8;

}  // namespace chromstab

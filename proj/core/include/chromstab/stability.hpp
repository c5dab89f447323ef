#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string_view>
#include <vector>

#include "chromstab/graph.hpp"

namespace chromstab {

enum class StabilityKind { vs, ivs, es };

std::string_view to_string(StabilityKind kind);
std::optional<StabilityKind> parse_stability_kind(std::string_view name);

/// Minimum deletion set that lowers chi by exactly one. The witness is the
/// lexicographically least minimum set (sorted lists compared elementwise),
/// reported in the caller's vertex labels.
struct StabilityResult {
  StabilityKind kind = StabilityKind::vs;
  int value = 0;
  /// vs and ivs: deleted vertices, ascending.
  std::vector<int> vertex_witness;
  /// es: deleted edges, lexicographic.
  std::vector<Edge> edge_witness;
  int chi_before = 0;
  int chi_after = 0;

  bool operator==(const StabilityResult&) const = default;
};

/// {kind, value, witness, chi_before, chi_after}; witness is [v, ...] or
/// [[u, v], ...].
void to_json(nlohmann::json& j, const StabilityResult& r);

/// All stability solvers throw PreconditionError on a graph without edges.
StabilityResult vertex_stability(const Graph& g);
StabilityResult independent_vertex_stability(const Graph& g);
StabilityResult edge_stability(const Graph& g);
StabilityResult stability(const Graph& g, StabilityKind kind);

/// Solves each component whose chromatic number equals chi(G) on its own and
/// sums; the other components never need touching.
StabilityResult stability_by_components(const Graph& g, StabilityKind kind);

/// Minimum number of monochromatic edges over all maps V -> {0..k-1}.
int min_monochromatic_edges(const Graph& g, int k);

inline constexpr int kVertexOracleMaxOrder = 10;
inline constexpr int kEdgeOracleMaxSize = 15;

/// Plain subset enumeration by increasing size with brute-force chromatic
/// numbers on each remainder. Limited to n <= 10.
int vertex_stability_oracle(const Graph& g, bool independent_only);

/// Edge subsets by increasing size, each remainder checked with the exact
/// chromatic solver. Limited to |E| <= 15.
int edge_stability_oracle(const Graph& g);

}  // namespace chromstab

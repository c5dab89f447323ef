#include "chromstab/stability.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <nlohmann/json.hpp>

#include "chromstab/chromatic.hpp"

namespace chromstab {

namespace {

void require_edge(const Graph& g) {
  if (!g.has_edge()) throw PreconditionError("stability invariants need a graph with an edge");
}

// Vertices of components that attain chi(G). Minimum witnesses never touch
// any other vertex: dropping such a vertex from a witness keeps it valid.
VertexSet critical_pool(const Graph& g, int chi) {
  VertexSet pool;
  for (VertexSet comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    if (chromatic_number(g, comp) == chi) pool |= comp;
  }
  return pool;
}

// Lexicographic enumeration of deletion sets of a fixed size, first hit wins.
class DeletionSetSearch {
 public:
  DeletionSetSearch(const Graph& g, int target, bool independent)
      : g_(g), target_(target), independent_(independent) {}

  std::optional<VertexSet> find(int size, VertexSet pool) {
    chosen_ = VertexSet{};
    if (descend(size, pool)) return chosen_;
    return std::nullopt;
  }

 private:
  bool descend(int remaining, VertexSet candidates) {
    if (remaining == 0) return k_colorable(g_, target_, g_.vertices() - chosen_);
    while (candidates.size() >= remaining) {
      const int v = candidates.min();
      candidates.erase(v);
      VertexSet next = candidates;
      if (independent_) next = next - g_.neighbors(v);
      chosen_.insert(v);
      if (descend(remaining - 1, next)) return true;
      chosen_.erase(v);
    }
    return false;
  }

  const Graph& g_;
  int target_;
  bool independent_;
  VertexSet chosen_;
};

StabilityResult vertex_deletion_stability(const Graph& g, StabilityKind kind) {
  require_edge(g);
  const int chi = chromatic_number(g).chi;
  const VertexSet pool = critical_pool(g, chi);
  DeletionSetSearch search(g, chi - 1, kind == StabilityKind::ivs);
  for (int size = 1; size <= pool.size(); ++size) {
    if (auto hit = search.find(size, pool)) {
      StabilityResult r;
      r.kind = kind;
      r.value = size;
      r.vertex_witness = hit->to_vector();
      r.chi_before = chi;
      r.chi_after = chromatic_number(g, g.vertices() - *hit);
      return r;
    }
  }
  // Unreachable: deleting a color class of an optimal coloring always works.
  throw std::logic_error("vertex stability search exhausted its pool");
}

// Branch and bound over maps V -> {0..k-1}. Edges split into hard ones that
// must stay bichromatic and soft ones that cost 1 when monochromatic; any
// other edge is ignored. Vertices are ordered so each one has as many
// already-placed neighbours as possible, and a vertex may open at most one
// fresh color.
class MonochromaticSearch {
 public:
  static constexpr int kInfeasible = std::numeric_limits<int>::max();

  MonochromaticSearch(const std::array<Word, kMaxVertices>& hard,
                      const std::array<Word, kMaxVertices>& soft, int k, VertexSet vertices)
      : hard_(hard), soft_(soft), k_(k) {
    VertexSet placed;
    VertexSet rest = vertices;
    while (!rest.empty()) {
      int pick = -1;
      int pick_links = -1;
      int pick_degree = -1;
      for (int v : rest) {
        const Word row = hard_[v] | soft_[v];
        const int links = std::popcount(row & placed.bits());
        const int degree = std::popcount(row & vertices.bits());
        if (links > pick_links || (links == pick_links && degree > pick_degree)) {
          pick = v;
          pick_links = links;
          pick_degree = degree;
        }
      }
      order_.push_back(pick);
      placed.insert(pick);
      rest.erase(pick);
    }
  }

  // Minimum cost if it is at most `upper`, else kInfeasible.
  int minimize(int upper) {
    best_ = upper + 1;
    extend(0, 0, 0);
    return best_ <= upper ? best_ : kInfeasible;
  }

 private:
  int placement_cost(int v, int c) const {
    if ((hard_[v] & classes_[c]) != 0) return kInfeasible;
    return std::popcount(soft_[v] & classes_[c]);
  }

  int remaining_bound(std::size_t depth, int used) const {
    int total = 0;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      const int v = order_[i];
      int cheapest = used < k_ ? 0 : kInfeasible;
      for (int c = 0; c < used && cheapest > 0; ++c) cheapest = std::min(cheapest, placement_cost(v, c));
      if (cheapest == kInfeasible) return kInfeasible;
      total += cheapest;
    }
    return total;
  }

  void extend(std::size_t depth, int used, int cost) {
    if (depth == order_.size()) {
      best_ = cost;
      return;
    }
    const int bound = remaining_bound(depth, used);
    if (bound == kInfeasible || cost + bound >= best_) return;

    const int v = order_[depth];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit && best_ > 0; ++c) {
      const int step = placement_cost(v, c);
      if (step == kInfeasible || cost + step >= best_) continue;
      classes_[c] |= Word{1} << v;
      extend(depth + 1, std::max(used, c + 1), cost + step);
      classes_[c] &= ~(Word{1} << v);
    }
  }

  const std::array<Word, kMaxVertices>& hard_;
  const std::array<Word, kMaxVertices>& soft_;
  int k_;
  std::vector<int> order_;
  std::array<Word, kMaxVertices + 1> classes_{};
  int best_ = 0;
};

// Sum of per-component minima, or kInfeasible once the budget is exceeded.
int min_cost_within(const Graph& g, const std::array<Word, kMaxVertices>& hard,
                    const std::array<Word, kMaxVertices>& soft, int k, VertexSet vertices,
                    int budget) {
  int total = 0;
  VertexSet rest = vertices;
  while (!rest.empty()) {
    const VertexSet comp = component_of(g, rest.min(), rest);
    rest = rest - comp;
    if (comp.size() < 2) continue;
    MonochromaticSearch search(hard, soft, k, comp);
    const int cost = search.minimize(budget - total);
    if (cost == MonochromaticSearch::kInfeasible) return MonochromaticSearch::kInfeasible;
    total += cost;
  }
  return total;
}

void set_edge(std::array<Word, kMaxVertices>& rows, const Edge& e) {
  rows[e.u] |= Word{1} << e.v;
  rows[e.v] |= Word{1} << e.u;
}

void clear_edge(std::array<Word, kMaxVertices>& rows, const Edge& e) {
  rows[e.u] &= ~(Word{1} << e.v);
  rows[e.v] &= ~(Word{1} << e.u);
}

std::array<Word, kMaxVertices> rows_of(const Graph& g) {
  std::array<Word, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  return rows;
}

}  // namespace

std::string_view to_string(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::vs:
      return "vs";
    case StabilityKind::ivs:
      return "ivs";
    case StabilityKind::es:
      return "es";
  }
  return "?";
}

std::optional<StabilityKind> parse_stability_kind(std::string_view name) {
  if (name == "vs") return StabilityKind::vs;
  if (name == "ivs") return StabilityKind::ivs;
  if (name == "es") return StabilityKind::es;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const StabilityResult& r) {
  j = nlohmann::json::object();
  j["kind"] = to_string(r.kind);
  j["value"] = r.value;
  if (r.kind == StabilityKind::es) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : r.edge_witness) edges.push_back({e.u, e.v});
    j["witness"] = std::move(edges);
  } else {
    j["witness"] = r.vertex_witness;
  }
  j["chi_before"] = r.chi_before;
  j["chi_after"] = r.chi_after;
}

StabilityResult vertex_stability(const Graph& g) {
  return vertex_deletion_stability(g, StabilityKind::vs);
}

StabilityResult independent_vertex_stability(const Graph& g) {
  return vertex_deletion_stability(g, StabilityKind::ivs);
}

int min_monochromatic_edges(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("min_monochromatic_edges needs k >= 1");
  const std::array<Word, kMaxVertices> hard{};
  const auto soft = rows_of(g);
  return min_cost_within(g, hard, soft, k, g.vertices(), g.size());
}

StabilityResult edge_stability(const Graph& g) {
  require_edge(g);
  const int chi = chromatic_number(g).chi;
  const int k = chi - 1;
  const VertexSet pool = critical_pool(g, chi);

  std::array<Word, kMaxVertices> hard{};
  std::array<Word, kMaxVertices> soft{};
  for (int v : pool) soft[v] = g.row(v);
  const int value = min_cost_within(g, hard, soft, k, pool, g.size());

  // Fix the witness one position at a time: the smallest next edge for which
  // the remaining free edges can still be resolved within budget. Edges
  // skipped over become hard, since a lexicographically smaller witness
  // would have used them.
  std::vector<Edge> candidates;
  for (const Edge& e : g.edges()) {
    if (pool.contains(e.u)) candidates.push_back(e);
  }
  std::vector<Edge> witness;
  std::size_t next = 0;
  for (int slot = 0; slot < value; ++slot) {
    const int budget = value - slot - 1;
    bool placed = false;
    for (std::size_t i = next; i < candidates.size() && !placed; ++i) {
      auto trial_hard = hard;
      auto trial_soft = soft;
      for (std::size_t j = next; j < i; ++j) {
        clear_edge(trial_soft, candidates[j]);
        set_edge(trial_hard, candidates[j]);
      }
      clear_edge(trial_soft, candidates[i]);
      if (min_cost_within(g, trial_hard, trial_soft, k, pool, budget) !=
          MonochromaticSearch::kInfeasible) {
        witness.push_back(candidates[i]);
        hard = trial_hard;
        soft = trial_soft;
        next = i + 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("edge stability witness reconstruction failed");
  }

  StabilityResult r;
  r.kind = StabilityKind::es;
  r.value = value;
  r.edge_witness = std::move(witness);
  r.chi_before = chi;
  r.chi_after = chromatic_number(delete_edges(g, r.edge_witness)).chi;
  return r;
}

StabilityResult stability(const Graph& g, StabilityKind kind) {
  switch (kind) {
    case StabilityKind::vs:
      return vertex_stability(g);
    case StabilityKind::ivs:
      return independent_vertex_stability(g);
    case StabilityKind::es:
      return edge_stability(g);
  }
  throw std::invalid_argument("unknown stability kind");
}

StabilityResult stability_by_components(const Graph& g, StabilityKind kind) {
  require_edge(g);
  StabilityResult total;
  total.kind = kind;
  total.chi_before = chromatic_number(g).chi;
  VertexSet removed;
  for (VertexSet comp : connected_components(g)) {
    const InducedSubgraph part = induced_subgraph(g, comp);
    if (chromatic_number(part.graph).chi != total.chi_before) continue;
    const StabilityResult r = stability(part.graph, kind);
    total.value += r.value;
    for (int v : r.vertex_witness) {
      total.vertex_witness.push_back(part.to_original[v]);
      removed.insert(part.to_original[v]);
    }
    for (const Edge& e : r.edge_witness) {
      total.edge_witness.push_back(make_edge(part.to_original[e.u], part.to_original[e.v]));
    }
  }
  std::sort(total.vertex_witness.begin(), total.vertex_witness.end());
  std::sort(total.edge_witness.begin(), total.edge_witness.end());
  total.chi_after = kind == StabilityKind::es
                        ? chromatic_number(delete_edges(g, total.edge_witness)).chi
                        : chromatic_number(g, g.vertices() - removed);
  return total;
}

}  // namespace chromstab

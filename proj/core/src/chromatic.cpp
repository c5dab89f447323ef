#include "chromstab/chromatic.hpp"

#include <algorithm>
#include <array>

namespace chromstab {

namespace {

// Backtracking DSATUR over one connected vertex set. Color classes are kept
// as bitsets so saturation is a handful of AND/popcount operations.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k, VertexSet vertices) : g_(g), k_(k), uncolored_(vertices) {
    for (int v : vertices) degree_[v] = (g.neighbors(v) & vertices).size();
  }

  bool solve() { return extend(0); }

  int color_of(int v) const { return color_[v]; }

 private:
  bool extend(int used) {
    if (uncolored_.empty()) return true;

    int pick = -1;
    int pick_sat = -1;
    for (int v : uncolored_) {
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (g_.row(v) & classes_[c]) != 0;
      if (sat == k_) return false;
      if (sat > pick_sat || (sat == pick_sat && degree_[v] > degree_[pick])) {
        pick = v;
        pick_sat = sat;
      }
    }

    const Word bit = Word{1} << pick;
    uncolored_.erase(pick);
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((g_.row(pick) & classes_[c]) != 0) continue;
      classes_[c] |= bit;
      color_[pick] = c;
      if (extend(std::max(used, c + 1))) return true;
      classes_[c] &= ~bit;
    }
    uncolored_.insert(pick);
    return false;
  }

  const Graph& g_;
  int k_;
  VertexSet uncolored_;
  std::array<Word, kMaxVertices + 1> classes_{};
  std::array<int, kMaxVertices> color_{};
  std::array<int, kMaxVertices> degree_{};
};

bool has_internal_edge(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return true;
  }
  return false;
}

// Solves every component of g[active] in turn; `on_colored` receives each
// component's vertex set together with its finished search.
template <typename OnColored>
bool color_components(const Graph& g, int k, VertexSet active, OnColored&& on_colored) {
  active &= g.vertices();
  if (active.empty()) return true;
  if (k <= 0) return false;
  if (k == 1) {
    if (has_internal_edge(g, active)) return false;
  }
  VertexSet rest = active;
  while (!rest.empty()) {
    const VertexSet comp = component_of(g, rest.min(), rest);
    rest = rest - comp;
    DsaturSearch search(g, k, comp);
    if (!search.solve()) return false;
    on_colored(comp, search);
  }
  return true;
}

}  // namespace

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= 0 && colors[v] < k) out[colors[v]].insert(static_cast<int>(v));
  }
  return out;
}

bool Coloring::is_proper(const Graph& g) const {
  if (colors.size() != static_cast<std::size_t>(g.order())) return false;
  for (int c : colors) {
    if (c != kUncolored && (c < 0 || c >= k)) return false;
  }
  for (const Edge& e : g.edges()) {
    if (colors[e.u] != kUncolored && colors[e.u] == colors[e.v]) return false;
  }
  return true;
}

int Coloring::colors_used() const {
  VertexSet seen;
  for (int c : colors) {
    if (c >= 0) seen.insert(c);
  }
  return seen.size();
}

bool k_colorable(const Graph& g, int k, VertexSet active) {
  return color_components(g, k, active, [](VertexSet, const DsaturSearch&) {});
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k, VertexSet active) {
  Coloring out;
  out.k = std::max(k, 0);
  out.colors.assign(static_cast<std::size_t>(g.order()), Coloring::kUncolored);
  const bool ok = color_components(g, k, active, [&](VertexSet comp, const DsaturSearch& search) {
    for (int v : comp) out.colors[v] = search.color_of(v);
  });
  if (!ok) return std::nullopt;
  return out;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  return is_k_colorable(g, k, g.vertices());
}

int greedy_clique_lower_bound(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  int best = n > 0 ? 1 : 0;
  for (int start : order) {
    VertexSet candidates = g.neighbors(start);
    int size = 1;
    for (int v : order) {
      if (!candidates.contains(v)) continue;
      ++size;
      candidates &= g.neighbors(v);
    }
    best = std::max(best, size);
  }
  return best;
}

Coloring greedy_dsatur(const Graph& g) {
  const int n = g.order();
  Coloring out;
  out.colors.assign(static_cast<std::size_t>(n), Coloring::kUncolored);
  std::array<Word, kMaxVertices + 1> classes{};
  VertexSet uncolored = g.vertices();
  while (!uncolored.empty()) {
    int pick = -1;
    int pick_sat = -1;
    for (int v : uncolored) {
      int sat = 0;
      for (int c = 0; c < out.k; ++c) sat += (g.row(v) & classes[c]) != 0;
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    int c = 0;
    while ((g.row(pick) & classes[c]) != 0) ++c;
    classes[c] |= Word{1} << pick;
    out.colors[pick] = c;
    out.k = std::max(out.k, c + 1);
    uncolored.erase(pick);
  }
  return out;
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return {};
  Coloring greedy = greedy_dsatur(g);
  for (int k = greedy_clique_lower_bound(g); k < greedy.k; ++k) {
    if (auto c = is_k_colorable(g, k)) return {k, std::move(*c)};
  }
  const int chi = greedy.k;
  return {chi, std::move(greedy)};
}

int chromatic_number(const Graph& g, VertexSet active) {
  return chromatic_number(induced_subgraph(g, active).graph).chi;
}

BrooksClass brooks_classify(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("brooks_classify needs a connected graph");
  const int n = g.order();
  if (n >= 2 && is_complete(g)) return BrooksClass::CompleteExtremal;
  if (n >= 3 && n % 2 == 1) {
    bool two_regular = true;
    for (int v = 0; v < n; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular) return BrooksClass::OddCycleExtremal;
  }
  return BrooksClass::NotExtremal;
}

}  // namespace chromstab

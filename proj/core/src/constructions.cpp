#include "chromstab/constructions.hpp"

#include <array>
#include <nlohmann/json.hpp>

namespace chromstab {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::petersen, "petersen", 0},
    {Family::complete, "complete", 1},
    {Family::cycle, "cycle", 1},
    {Family::path, "path", 1},
    {Family::gnk, "gnk", 2},
    {Family::hk, "hk", 1},
    {Family::gk, "gk", 1},
    {Family::hprimek, "hprimek", 1},
    {Family::gprimek, "gprimek", 1},
    {Family::thm4sharp, "thm4sharp", 1},
}};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void add_clique(std::vector<Edge>& edges, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back(make_edge(members[i], members[j]));
  }
}

// Cliques of size `clique` sharing vertex `base`; fillers follow the hub.
void add_clique_fan(std::vector<Edge>& edges, int base, int cliques, int clique) {
  int next = base + 1;
  for (int c = 0; c < cliques; ++c) {
    std::vector<int> members{base};
    for (int i = 1; i < clique; ++i) members.push_back(next++);
    add_clique(edges, members);
  }
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.family;
  }
  return std::nullopt;
}

int family_arity(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.arity;
  }
  return 0;
}

void to_json(nlohmann::json& j, const ExpectedInvariants& e) {
  j = nlohmann::json::object();
  auto put = [&](const char* key, const std::optional<int>& value) {
    if (value) j[key] = *value;
  };
  put("chi", e.chi);
  put("delta", e.delta);
  put("vs", e.vs);
  put("ivs", e.ivs);
  put("es", e.es);
  if (!e.derived.empty()) j["derived"] = e.derived;
}

Graph standard_graph(StandardKind kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::complete: {
      require(n >= 1, "complete graph needs n >= 1");
      std::vector<int> all;
      for (int v = 0; v < n; ++v) all.push_back(v);
      add_clique(edges, all);
      break;
    }
    case StandardKind::cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
      break;
    case StandardKind::path:
      require(n >= 1, "path needs n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
  }
  return Graph::from_edge_list(n, edges);
}

Graph petersen() {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto& p = pairs[i];
      const auto& q = pairs[j];
      if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(10, edges);
}

Construction gnk(int n, int k) {
  require(n >= 2, "gnk needs n >= 2");
  require(k >= 3, "gnk needs k >= 3");
  const int cycle = 2 * n;
  const int order = cycle * (2 * k - 1);
  require(order <= kMaxVertices, "gnk(" + std::to_string(n) + "," + std::to_string(k) +
                                     ") exceeds 62 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < cycle; ++v) edges.push_back(make_edge(v, (v + 1) % cycle));
  int next = cycle;
  for (int v = 0; v < cycle; ++v) {
    for (int copy = 0; copy < 2; ++copy) {
      std::vector<int> members{v};
      for (int i = 1; i < k; ++i) members.push_back(next++);
      add_clique(edges, members);
    }
  }
  Construction out{Graph::from_edge_list(order, edges), {}};
  out.expected.chi = k;
  out.expected.delta = 2 * k;
  out.expected.vs = 2 * n;
  out.expected.ivs = 3 * n;
  return out;
}

Graph h_k(int k) {
  require(k >= 3, "k must be at least 3");
  require(k % 2 == 1, "k must be odd");
  std::vector<Edge> edges;
  add_clique_fan(edges, 0, 2, (k + 1) / 2);
  return Graph::from_edge_list(k, edges);
}

Construction g_k(int k) {
  require(k >= 3, "k must be at least 3");
  require(k % 2 == 1, "k must be odd");
  std::vector<Edge> edges;
  add_clique_fan(edges, 0, 2, (k + 1) / 2);
  add_clique_fan(edges, k, 2, (k + 1) / 2);
  edges.push_back({0, k});
  Construction out{Graph::from_edge_list(2 * k, edges), {}};
  out.expected.chi = (k + 1) / 2;
  out.expected.delta = k;
  out.expected.vs = 2;
  out.expected.ivs = 3;
  return out;
}

Graph h_prime_k(int k) {
  require(k >= 1, "k must be at least 1");
  require(2 * k + 1 <= kMaxVertices, "k too large for 62 vertices");
  std::vector<Edge> edges;
  add_clique_fan(edges, 0, k, 3);
  return Graph::from_edge_list(2 * k + 1, edges);
}

Construction g_prime_k(int k) {
  require(k >= 1, "k must be at least 1");
  const int half = 2 * k + 1;
  require(2 * half <= kMaxVertices, "k too large for 62 vertices");
  std::vector<Edge> edges;
  add_clique_fan(edges, 0, k, 3);
  add_clique_fan(edges, half, k, 3);
  edges.push_back({0, half});
  Construction out{Graph::from_edge_list(2 * half, edges), {}};
  out.expected.chi = 3;
  out.expected.delta = 2 * k + 1;
  out.expected.vs = 2;
  out.expected.ivs = k + 1;
  out.expected.derived = {"delta"};
  return out;
}

Construction two_cliques_sharing_vertex(int k) {
  require(k >= 2, "k must be at least 2");
  require(k % 2 == 0, "k must be even");
  require(k + 1 <= kMaxVertices, "k too large for 62 vertices");
  std::vector<Edge> edges;
  add_clique_fan(edges, 0, 2, k / 2 + 1);
  Construction out{Graph::from_edge_list(k + 1, edges), {}};
  out.expected.chi = k / 2 + 1;
  out.expected.delta = k;
  out.expected.vs = 1;
  out.expected.es = 2;
  return out;
}

Construction build(const ConstructionSpec& spec) {
  const int arity = family_arity(spec.family);
  require(static_cast<int>(spec.params.size()) == arity,
          std::string(family_name(spec.family)) + " takes " + std::to_string(arity) +
              " parameter(s)");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::petersen: {
      Construction out{petersen(), {}};
      out.expected.vs = 3;
      return out;
    }
    case Family::complete:
      return {standard_graph(StandardKind::complete, p[0]), {}};
    case Family::cycle:
      return {standard_graph(StandardKind::cycle, p[0]), {}};
    case Family::path:
      return {standard_graph(StandardKind::path, p[0]), {}};
    case Family::gnk:
      return gnk(p[0], p[1]);
    case Family::hk:
      return {h_k(p[0]), {}};
    case Family::gk:
      return g_k(p[0]);
    case Family::hprimek:
      return {h_prime_k(p[0]), {}};
    case Family::gprimek:
      return g_prime_k(p[0]);
    case Family::thm4sharp:
      return two_cliques_sharing_vertex(p[0]);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace chromstab

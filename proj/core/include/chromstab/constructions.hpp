#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromstab/graph.hpp"

namespace chromstab {

enum class Family { petersen, complete, cycle, path, gnk, hk, gk, hprimek, gprimek, thm4sharp };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
/// Number of integer parameters the family takes.
int family_arity(Family family);

struct ConstructionSpec {
  Family family = Family::petersen;
  std::vector<int> params;
};

/// Known invariant values of a family. Fields are left empty where nothing is
/// claimed; `derived` names fields computed from the construction itself
/// rather than known in closed form.
struct ExpectedInvariants {
  std::optional<int> chi;
  std::optional<int> delta;
  std::optional<int> vs;
  std::optional<int> ivs;
  std::optional<int> es;
  std::vector<std::string> derived;
};

void to_json(nlohmann::json& j, const ExpectedInvariants& e);

struct Construction {
  Graph graph;
  ExpectedInvariants expected;
};

enum class StandardKind { complete, cycle, path };

/// Cycles and paths run through 0..n-1 in index order.
Graph standard_graph(StandardKind kind, int n);

/// Kneser graph K(5,2); vertex i is the i-th 2-subset of {0..4} in
/// lexicographic order.
Graph petersen();

/// C_{2n} with two K_k hung on every cycle vertex (n >= 2, k >= 3). Cycle
/// vertices are 0..2n-1, followed by the k-1 fillers of each clique in
/// block order.
Construction gnk(int n, int k);

/// Two K_{(k+1)/2} sharing vertex 0 (k odd, k >= 3).
Graph h_k(int k);
/// Two copies of h_k (at offsets 0 and k) with their hubs joined.
Construction g_k(int k);

/// Friendship graph: k triangles sharing hub 0 (k >= 1).
Graph h_prime_k(int k);
/// Two copies of h_prime_k (at offsets 0 and 2k+1) with their hubs joined.
Construction g_prime_k(int k);

/// Two K_{k/2+1} sharing vertex 0 (k even, k >= 2); sits exactly on the
/// chi = Delta/2 + 1 boundary where vs and es separate.
Construction two_cliques_sharing_vertex(int k);

/// Validates the parameter count and the family's constraints; throws
/// std::invalid_argument naming the violated constraint.
Construction build(const ConstructionSpec& spec);

}  // namespace chromstab

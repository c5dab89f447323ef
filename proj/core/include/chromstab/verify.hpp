#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromstab/corpus.hpp"
#include "chromstab/graph.hpp"
#include "chromstab/stability.hpp"

namespace chromstab {

enum class CheckId { theorem_main, theorem_es, nordhaus_gaddum, lemma_delta, bounds, problem1 };

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
std::vector<CheckId> all_checks();

/// Lazily computed invariants of one graph, shared by every check run on it.
class GraphProfile {
 public:
  explicit GraphProfile(Graph g);

  const Graph& graph() const { return g_; }
  const std::string& graph6();
  int order() const { return g_.order(); }
  int delta() const { return delta_; }
  bool has_edge() const { return g_.has_edge(); }
  bool connected();
  bool complete() const;
  int chi();
  const StabilityResult& vs();
  const StabilityResult& ivs();
  const StabilityResult& es();
  int complement_chi();
  const StabilityResult& complement_vs();

 private:
  Graph g_;
  int delta_;
  std::optional<std::string> graph6_;
  std::optional<bool> connected_;
  std::optional<int> chi_;
  std::optional<StabilityResult> vs_, ivs_, es_, complement_vs_;
  std::optional<int> complement_chi_;
};

/// Per-graph verdict of one check. `holds` is set exactly when the
/// hypothesis applies.
struct CheckOutcome {
  std::string check_id;
  std::string graph;
  bool hypothesis_applies = false;
  std::optional<bool> holds;
  nlohmann::json data = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const CheckOutcome& o);

/// Hypothesis chi in {Delta, Delta+1}; holds iff vs = ivs.
CheckOutcome check_theorem_main(GraphProfile& p);
/// Hypothesis 2 chi > Delta + 2; holds iff vs = es.
CheckOutcome check_theorem_es(GraphProfile& p);
/// Hypothesis: at least one edge and not complete; holds iff
/// vs(G) + vs(complement) <= n + 1. Never throws.
CheckOutcome check_nordhaus_gaddum(GraphProfile& p);
/// Hypothesis: connected, chi = Delta, vs = 1; holds iff some vertex of
/// degree Delta has chi(G - v) = Delta - 1.
CheckOutcome check_lemma_delta(GraphProfile& p);
/// Always applies; holds iff vs <= ivs, vs <= es and ivs <= floor(n / chi).
CheckOutcome check_bounds(GraphProfile& p);
/// Hypothesis 2 chi >= Delta + threshold_offset (default 2);
/// holds iff vs = ivs.
CheckOutcome check_problem1(GraphProfile& p, int threshold_offset = 2);

/// Convenience overloads on a bare graph. All but check_nordhaus_gaddum
/// throw PreconditionError on an edgeless graph.
CheckOutcome check_theorem_main(const Graph& g);
CheckOutcome check_theorem_es(const Graph& g);
CheckOutcome check_nordhaus_gaddum(const Graph& g);
CheckOutcome check_lemma_delta(const Graph& g);
CheckOutcome check_bounds(const Graph& g);
CheckOutcome check_problem1(const Graph& g, int threshold_offset = 2);

struct RunOptions {
  int workers = 1;
  int problem1_offset = 2;
  /// When false wall_time_ms is reported as 0 so reports are byte-stable.
  bool record_timing = true;
};

CheckOutcome run_check(CheckId id, GraphProfile& p, const RunOptions& options = {});

struct VerificationReport {
  std::string check_id;
  std::string corpus;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t hypothesis_hits = 0;
  std::vector<CheckOutcome> violations;
  std::vector<ParseFailure> parse_failures;
  std::int64_t wall_time_ms = 0;
  std::optional<std::string> note;
};

void to_json(nlohmann::json& j, const VerificationReport& r);

/// Applies every check to every corpus graph. Graphs are handed to workers
/// in index chunks and merged back in index order, so the reports do not
/// depend on the worker count. Edgeless graphs are scanned but never meet a
/// hypothesis.
std::vector<VerificationReport> run_corpus(const Corpus& corpus, std::span<const CheckId> checks,
                                           const RunOptions& options = {});

/// Counterexample search for vs = ivs under
/// 2 chi >= Delta + offset. An empty violation list is evidence only.
VerificationReport search_problem1(const Corpus& corpus, const RunOptions& options = {});

/// "check_id,corpus,graphs_scanned,hypothesis_hits,violations,parse_failures"
/// header plus one row per report.
std::string csv_summary(std::span<const VerificationReport> reports);

}  // namespace chromstab

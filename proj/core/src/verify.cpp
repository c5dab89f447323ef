#include "chromstab/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "chromstab/chromatic.hpp"
#include "chromstab/graph_io.hpp"

namespace chromstab {

namespace {

constexpr std::uint64_t kChunk = 256;

void require_edge(const GraphProfile& p) {
  if (!p.has_edge()) throw PreconditionError("check needs a graph with an edge");
}

CheckOutcome start(CheckId id, GraphProfile& p) {
  CheckOutcome o;
  o.check_id = to_string(id);
  o.graph = p.graph6();
  o.data["n"] = p.order();
  o.data["delta"] = p.delta();
  return o;
}

void conclude(CheckOutcome& o, bool applies, bool holds) {
  o.hypothesis_applies = applies;
  if (applies) {
    o.holds = holds;
  } else {
    o.holds.reset();
  }
}

}  // namespace

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::theorem_main:
      return "theorem-main";
    case CheckId::theorem_es:
      return "theorem-es";
    case CheckId::nordhaus_gaddum:
      return "nordhaus-gaddum";
    case CheckId::lemma_delta:
      return "lemma-delta";
    case CheckId::bounds:
      return "bounds";
    case CheckId::problem1:
      return "problem1";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (CheckId id : all_checks()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<CheckId> all_checks() {
  return {CheckId::theorem_main, CheckId::theorem_es, CheckId::nordhaus_gaddum,
          CheckId::lemma_delta,  CheckId::bounds,     CheckId::problem1};
}

GraphProfile::GraphProfile(Graph g) : g_(std::move(g)), delta_(max_degree(g_)) {}

const std::string& GraphProfile::graph6() {
  if (!graph6_) graph6_ = to_graph6(g_);
  return *graph6_;
}

bool GraphProfile::connected() {
  if (!connected_) connected_ = is_connected(g_);
  return *connected_;
}

bool GraphProfile::complete() const { return is_complete(g_); }

int GraphProfile::chi() {
  if (!chi_) chi_ = chromatic_number(g_).chi;
  return *chi_;
}

const StabilityResult& GraphProfile::vs() {
  if (!vs_) vs_ = vertex_stability(g_);
  return *vs_;
}

const StabilityResult& GraphProfile::ivs() {
  if (!ivs_) ivs_ = independent_vertex_stability(g_);
  return *ivs_;
}

const StabilityResult& GraphProfile::es() {
  if (!es_) es_ = edge_stability(g_);
  return *es_;
}

int GraphProfile::complement_chi() {
  if (!complement_chi_) complement_chi_ = chromatic_number(complement(g_)).chi;
  return *complement_chi_;
}

const StabilityResult& GraphProfile::complement_vs() {
  if (!complement_vs_) complement_vs_ = vertex_stability(complement(g_));
  return *complement_vs_;
}

void to_json(nlohmann::json& j, const CheckOutcome& o) {
  j = nlohmann::json::object();
  j["check_id"] = o.check_id;
  j["graph"] = o.graph;
  j["hypothesis_applies"] = o.hypothesis_applies;
  if (o.holds) {
    j["holds"] = *o.holds;
  } else {
    j["holds"] = nullptr;
  }
  j["data"] = o.data;
}

CheckOutcome check_theorem_main(GraphProfile& p) {
  require_edge(p);
  CheckOutcome o = start(CheckId::theorem_main, p);
  const int chi = p.chi();
  o.data["chi"] = chi;
  const bool applies = chi == p.delta() || chi == p.delta() + 1;
  bool holds = false;
  if (applies) {
    o.data["vs"] = p.vs();
    o.data["ivs"] = p.ivs();
    holds = p.vs().value == p.ivs().value;
  }
  conclude(o, applies, holds);
  return o;
}

CheckOutcome check_theorem_es(GraphProfile& p) {
  require_edge(p);
  CheckOutcome o = start(CheckId::theorem_es, p);
  const int chi = p.chi();
  o.data["chi"] = chi;
  const bool applies = 2 * chi > p.delta() + 2;
  bool holds = false;
  if (applies) {
    o.data["vs"] = p.vs();
    o.data["es"] = p.es();
    holds = p.vs().value == p.es().value;
  }
  conclude(o, applies, holds);
  return o;
}

CheckOutcome check_nordhaus_gaddum(GraphProfile& p) {
  CheckOutcome o = start(CheckId::nordhaus_gaddum, p);
  const bool applies = p.has_edge() && !p.complete();
  bool holds = false;
  if (applies) {
    const int sum = p.vs().value + p.complement_vs().value;
    o.data["vs"] = p.vs();
    o.data["vs_complement"] = p.complement_vs();
    o.data["sum"] = sum;
    holds = sum <= p.order() + 1;
  }
  conclude(o, applies, holds);
  return o;
}

CheckOutcome check_lemma_delta(GraphProfile& p) {
  require_edge(p);
  CheckOutcome o = start(CheckId::lemma_delta, p);
  const bool connected = p.connected();
  o.data["connected"] = connected;
  const int delta = p.delta();
  bool applies = connected && p.chi() == delta;
  o.data["chi"] = p.chi();
  if (applies) {
    o.data["vs"] = p.vs().value;
    applies = p.vs().value == 1;
  }
  bool holds = false;
  if (applies) {
    const Graph& g = p.graph();
    int found = -1;
    for (int v = 0; v < g.order() && found < 0; ++v) {
      if (g.degree(v) == delta && k_colorable(g, delta - 1, g.vertices() - VertexSet{v})) found = v;
    }
    o.data["max_degree_witness"] = found;
    holds = found >= 0;
  }
  conclude(o, applies, holds);
  return o;
}

CheckOutcome check_bounds(GraphProfile& p) {
  require_edge(p);
  CheckOutcome o = start(CheckId::bounds, p);
  const int chi = p.chi();
  const int vs = p.vs().value;
  const int ivs = p.ivs().value;
  const int es = p.es().value;
  const int cap = p.order() / chi;
  o.data["chi"] = chi;
  o.data["vs"] = vs;
  o.data["ivs"] = ivs;
  o.data["es"] = es;
  o.data["floor_n_over_chi"] = cap;
  conclude(o, true, vs <= ivs && vs <= es && ivs <= cap);
  return o;
}

CheckOutcome check_problem1(GraphProfile& p, int threshold_offset) {
  require_edge(p);
  CheckOutcome o = start(CheckId::problem1, p);
  const int chi = p.chi();
  o.data["chi"] = chi;
  o.data["threshold_offset"] = threshold_offset;
  const bool applies = 2 * chi >= p.delta() + threshold_offset;
  bool holds = false;
  if (applies) {
    o.data["vs"] = p.vs();
    o.data["ivs"] = p.ivs();
    holds = p.vs().value == p.ivs().value;
  }
  conclude(o, applies, holds);
  return o;
}

CheckOutcome check_theorem_main(const Graph& g) {
  GraphProfile p(g);
  return check_theorem_main(p);
}

CheckOutcome check_theorem_es(const Graph& g) {
  GraphProfile p(g);
  return check_theorem_es(p);
}

CheckOutcome check_nordhaus_gaddum(const Graph& g) {
  GraphProfile p(g);
  return check_nordhaus_gaddum(p);
}

CheckOutcome check_lemma_delta(const Graph& g) {
  GraphProfile p(g);
  return check_lemma_delta(p);
}

CheckOutcome check_bounds(const Graph& g) {
  GraphProfile p(g);
  return check_bounds(p);
}

CheckOutcome check_problem1(const Graph& g, int threshold_offset) {
  GraphProfile p(g);
  return check_problem1(p, threshold_offset);
}

CheckOutcome run_check(CheckId id, GraphProfile& p, const RunOptions& options) {
  if (!p.has_edge() && id != CheckId::nordhaus_gaddum) {
    CheckOutcome o = start(id, p);
    conclude(o, false, false);
    return o;
  }
  switch (id) {
    case CheckId::theorem_main:
      return check_theorem_main(p);
    case CheckId::theorem_es:
      return check_theorem_es(p);
    case CheckId::nordhaus_gaddum:
      return check_nordhaus_gaddum(p);
    case CheckId::lemma_delta:
      return check_lemma_delta(p);
    case CheckId::bounds:
      return check_bounds(p);
    case CheckId::problem1:
      return check_problem1(p, options.problem1_offset);
  }
  throw std::invalid_argument("unknown check");
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json::object();
  j["check_id"] = r.check_id;
  j["corpus"] = r.corpus;
  j["graphs_scanned"] = r.graphs_scanned;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["violations"] = r.violations;
  j["parse_failures"] = r.parse_failures.size();
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& f : r.parse_failures) lines.push_back({{"line", f.line}, {"message", f.message}});
  j["parse_failure_lines"] = std::move(lines);
  j["wall_time_ms"] = r.wall_time_ms;
  if (r.note) j["note"] = *r.note;
}

std::vector<VerificationReport> run_corpus(const Corpus& corpus, std::span<const CheckId> checks,
                                           const RunOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("workers must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  struct ChunkResult {
    std::vector<std::uint64_t> hits;
    std::vector<std::vector<CheckOutcome>> violations;
  };
  const std::uint64_t total = corpus.size();
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
        ChunkResult& out = results[c];
        out.hits.assign(checks.size(), 0);
        out.violations.resize(checks.size());
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < end; ++i) {
          GraphProfile profile(corpus.at(i));
          for (std::size_t k = 0; k < checks.size(); ++k) {
            CheckOutcome o = run_check(checks[k], profile, options);
            if (!o.hypothesis_applies) continue;
            ++out.hits[k];
            if (!*o.holds) out.violations[k].push_back(std::move(o));
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_chunk = chunks;
    }
  };

  const int threads = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::vector<VerificationReport> reports;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    VerificationReport r;
    r.check_id = to_string(checks[k]);
    r.corpus = corpus.description();
    r.graphs_scanned = total;
    r.parse_failures = corpus.parse_failures();
    r.wall_time_ms = options.record_timing ? elapsed : 0;
    for (auto& chunk : results) {
      r.hypothesis_hits += chunk.hits[k];
      for (auto& v : chunk.violations[k]) r.violations.push_back(std::move(v));
    }
    if (checks[k] == CheckId::problem1) {
      r.note = r.violations.empty()
                   ? "no counterexample in this corpus: evidence, not proof"
                   : "counterexample found";
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport search_problem1(const Corpus& corpus, const RunOptions& options) {
  const CheckId id = CheckId::problem1;
  return run_corpus(corpus, std::span<const CheckId>(&id, 1), options).front();
}

std::string csv_summary(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "check_id,corpus,graphs_scanned,hypothesis_hits,violations,parse_failures\n";
  for (const auto& r : reports) {
    out << r.check_id << ",\"" << r.corpus << "\"," << r.graphs_scanned << ',' << r.hypothesis_hits
        << ',' << r.violations.size() << ',' << r.parse_failures.size() << '\n';
  }
  return out.str();
}

}  // namespace chromstab

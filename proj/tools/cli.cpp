#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>

#include "chromstab/chromatic.hpp"
#include "chromstab/constructions.hpp"
#include "chromstab/corpus.hpp"
#include "chromstab/graph_io.hpp"
#include "chromstab/stability.hpp"
#include "chromstab/verify.hpp"

namespace chromstab::cli {

namespace {

using nlohmann::json;

constexpr int kOracleDiffDefaultMaxN = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string g6;
  std::string g6_file;
  std::string family;
  std::vector<int> params;
  int enumerate = 0;
  int from = 0;
};

int enumeration_limit() {
  const char* raw = std::getenv("CHROMSTAB_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationLimit;
  try {
    return std::clamp(std::stoi(raw), 1, kMaxEnumerationOrder);
  } catch (const std::exception&) {
    throw UsageError(std::string("CHROMSTAB_MAX_N is not an integer: ") + raw);
  }
}

void add_graph_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--g6", in.g6, "Inline graph6 string");
  cmd->add_option("--g6-file", in.g6_file, "File with one graph6 string per line");
  cmd->add_option("--family", in.family,
                  "Named construction: petersen complete cycle path gnk hk gk hprimek gprimek "
                  "thm4sharp");
  cmd->add_option("params", in.params, "Integer parameters of --family");
}

void add_corpus_flags(CLI::App* cmd, InputFlags& in) {
  add_graph_flags(cmd, in);
  cmd->add_option("--enumerate", in.enumerate, "Every labeled graph on N vertices")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--from", in.from, "With --enumerate, start at this order instead of N")
      ->check(CLI::PositiveNumber);
}

int source_count(const InputFlags& in) {
  return static_cast<int>(!in.g6.empty()) + static_cast<int>(!in.g6_file.empty()) +
         static_cast<int>(!in.family.empty()) + static_cast<int>(in.enumerate > 0);
}

Construction build_family(const std::string& name, const std::vector<int>& params) {
  const auto family = parse_family(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  try {
    return build({*family, params});
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::string family_label(const std::string& name, const std::vector<int>& params) {
  std::string label = "family " + name;
  for (int p : params) label += " " + std::to_string(p);
  return label;
}

Corpus load_corpus(const InputFlags& in) {
  if (source_count(in) != 1) {
    throw UsageError("give exactly one of --g6, --g6-file, --family, --enumerate");
  }
  if (!in.params.empty() && in.family.empty()) {
    throw UsageError("positional parameters are only accepted with --family");
  }
  if (in.from > 0 && in.enumerate == 0) throw UsageError("--from needs --enumerate");
  if (in.enumerate > 0) {
    const int from = in.from > 0 ? in.from : in.enumerate;
    try {
      return Corpus::enumeration(from, in.enumerate, enumeration_limit());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) + " (raise CHROMSTAB_MAX_N to go further)");
    }
  }
  if (!in.g6.empty()) return Corpus::from_graphs({parse_graph6(in.g6)}, "graph6 " + in.g6);
  if (!in.g6_file.empty()) return Corpus::from_graph6_file(in.g6_file);
  return Corpus::from_graphs({build_family(in.family, in.params).graph},
                             family_label(in.family, in.params));
}

json invariants_of(const Graph& g, const std::vector<StabilityKind>& kinds, bool want_chi) {
  if (!g.has_edge()) throw PreconditionError("graph has no edge");
  json j = json::object();
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["delta"] = max_degree(g);
  json witness = json::object();
  if (want_chi) {
    const ChromaticResult chi = chromatic_number(g);
    j["chi"] = chi.chi;
    witness["chi"] = chi.coloring.colors;
  }
  json results = json::object();
  for (StabilityKind kind : kinds) {
    const StabilityResult r = stability(g, kind);
    const std::string key(to_string(kind));
    j[key] = r.value;
    results[key] = r;
    witness[key] = json(r)["witness"];
  }
  j["witness"] = std::move(witness);
  if (!results.empty()) j["stability"] = std::move(results);
  return j;
}

void print_pretty_invariants(std::ostream& out, const json& j) {
  out << "graph6 " << j["graph6"].get<std::string>() << "  n=" << j["n"] << " m=" << j["m"]
      << " delta=" << j["delta"] << '\n';
  for (const char* key : {"chi", "vs", "ivs", "es"}) {
    if (!j.contains(key)) continue;
    out << std::left << std::setw(5) << key << std::setw(4) << j[key].get<int>() << "witness "
        << j["witness"][key].dump() << '\n';
  }
}

int cmd_invariants(const InputFlags& in, bool chi, bool vs, bool ivs, bool es, bool all,
                   bool pretty, std::ostream& out) {
  if (source_count(in) != 1 || in.enumerate > 0) {
    throw UsageError("give exactly one of --g6, --g6-file, --family");
  }
  if (!(chi || vs || ivs || es)) all = true;
  std::vector<StabilityKind> kinds;
  if (all || vs) kinds.push_back(StabilityKind::vs);
  if (all || ivs) kinds.push_back(StabilityKind::ivs);
  if (all || es) kinds.push_back(StabilityKind::es);

  std::vector<json> items;
  if (!in.family.empty()) {
    const Construction c = build_family(in.family, in.params);
    json j = invariants_of(c.graph, kinds, all || chi);
    j["expected"] = c.expected;
    items.push_back(std::move(j));
  } else {
    const Corpus corpus = load_corpus(in);
    if (!corpus.parse_failures().empty()) {
      const auto& f = corpus.parse_failures().front();
      throw ParseError("line " + std::to_string(f.line) + ": " + f.message);
    }
    for (std::uint64_t i = 0; i < corpus.size(); ++i) {
      items.push_back(invariants_of(corpus.at(i), kinds, all || chi));
    }
  }

  if (items.empty()) throw ParseError("no graph in input");
  if (pretty) {
    for (const auto& j : items) print_pretty_invariants(out, j);
  } else if (in.g6_file.empty()) {
    out << items.front().dump() << '\n';
  } else {
    out << json(items).dump() << '\n';
  }
  return kOk;
}

int cmd_generate(const std::string& family, const std::vector<int>& params,
                 const std::string& format, const std::string& sidecar, std::ostream& out) {
  const Construction c = build_family(family, params);
  if (format == "g6") {
    out << to_graph6(c.graph) << '\n';
  } else {
    out << to_edge_list(c.graph);
  }
  if (!sidecar.empty()) {
    std::ofstream file(sidecar);
    if (!file) throw CorpusIoError("cannot write sidecar '" + sidecar + "'");
    json j = json::object();
    j["family"] = family;
    j["params"] = params;
    j["n"] = c.graph.order();
    j["m"] = c.graph.size();
    j["graph6"] = to_graph6(c.graph);
    j["expected"] = c.expected;
    file << j.dump(2) << '\n';
  }
  return kOk;
}

std::vector<CheckId> parse_checks(const std::vector<std::string>& names) {
  std::vector<CheckId> ids;
  for (const auto& raw : names) {
    std::stringstream parts(raw);
    std::string name;
    while (std::getline(parts, name, ',')) {
      if (name == "all") {
        for (CheckId id : all_checks()) ids.push_back(id);
        continue;
      }
      const auto id = parse_check_id(name);
      if (!id) throw UsageError("unknown check '" + name + "'");
      ids.push_back(*id);
    }
  }
  if (ids.empty()) ids = all_checks();
  std::vector<CheckId> unique;
  for (CheckId id : ids) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  }
  return unique;
}

int cmd_verify(const InputFlags& in, const std::vector<std::string>& check_names, int workers,
               int offset, bool timing, const std::string& out_dir, const std::string& csv,
               bool pretty, std::ostream& out, std::ostream& err) {
  const std::vector<CheckId> checks = parse_checks(check_names);
  const Corpus corpus = load_corpus(in);
  RunOptions options;
  options.workers = workers;
  options.problem1_offset = offset;
  options.record_timing = timing;
  const auto reports = run_corpus(corpus, checks, options);

  std::size_t violations = 0;
  json summary = json::object();
  summary["corpus"] = corpus.description();
  json rows = json::array();
  for (const auto& r : reports) {
    violations += r.violations.size();
    json row = {{"check_id", r.check_id},
                {"graphs_scanned", r.graphs_scanned},
                {"hypothesis_hits", r.hypothesis_hits},
                {"violations", r.violations.size()},
                {"parse_failures", r.parse_failures.size()}};
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const std::string path = (std::filesystem::path(out_dir) / (r.check_id + ".json")).string();
      std::ofstream file(path);
      if (!file) throw CorpusIoError("cannot write report '" + path + "'");
      file << json(r).dump(2) << '\n';
      row["report"] = path;
      if (!r.violations.empty()) err << r.check_id << ": violations, see " << path << '\n';
    }
    rows.push_back(std::move(row));
  }
  if (!csv.empty()) {
    std::ofstream file(csv);
    if (!file) throw CorpusIoError("cannot write csv '" + csv + "'");
    file << csv_summary(reports);
  }
  for (const auto& f : corpus.parse_failures()) {
    err << "parse failure on line " << f.line << ": " << f.message << '\n';
  }

  if (pretty) {
    out << "corpus: " << corpus.description() << '\n';
    for (const auto& row : rows) {
      out << std::left << std::setw(18) << row["check_id"].get<std::string>() << " scanned "
          << std::setw(9) << row["graphs_scanned"].get<std::uint64_t>() << " hits " << std::setw(9)
          << row["hypothesis_hits"].get<std::uint64_t>() << " violations "
          << row["violations"].get<std::size_t>() << '\n';
    }
  } else if (out_dir.empty()) {
    out << json(reports).dump() << '\n';
  } else {
    summary["checks"] = std::move(rows);
    summary["violations_total"] = violations;
    out << summary.dump() << '\n';
  }
  return violations == 0 ? kOk : kViolation;
}

int cmd_search(const InputFlags& in, int offset, int workers, bool timing, std::ostream& out) {
  const Corpus corpus = load_corpus(in);
  RunOptions options;
  options.workers = workers;
  options.problem1_offset = offset;
  options.record_timing = timing;
  VerificationReport r = search_problem1(corpus, options);
  json j = r;
  j["hypothesis"] = "2*chi >= delta + " + std::to_string(offset);
  j["evidence_not_proof"] = true;
  out << j.dump() << '\n';
  return r.violations.empty() ? kOk : kViolation;
}

int cmd_oracle_diff(const InputFlags& in, bool force, std::ostream& out) {
  if (!force) {
    if (in.enumerate > kOracleDiffDefaultMaxN) {
      throw UsageError("oracle-diff is limited to n <= " + std::to_string(kOracleDiffDefaultMaxN) +
                       " without --force");
    }
  }
  const Corpus corpus = load_corpus(in);
  if (!force && corpus.max_order() > kOracleDiffDefaultMaxN) {
    throw UsageError("oracle-diff is limited to n <= " + std::to_string(kOracleDiffDefaultMaxN) +
                     " without --force");
  }

  json mismatches = json::array();
  std::uint64_t comparisons = 0;
  std::uint64_t skipped = 0;
  auto compare = [&](const Graph& g, const char* quantity, int solver, int oracle) {
    ++comparisons;
    if (solver != oracle) {
      mismatches.push_back(
          {{"graph", to_graph6(g)}, {"quantity", quantity}, {"solver", solver}, {"oracle", oracle}});
    }
  };
  for (std::uint64_t i = 0; i < corpus.size(); ++i) {
    const Graph g = corpus.at(i);
    if (g.order() <= kChromaticOracleMaxOrder) {
      compare(g, "chi", chromatic_number(g).chi, chromatic_oracle(g));
    } else {
      ++skipped;
    }
    if (!g.has_edge()) continue;
    if (g.order() <= kVertexOracleMaxOrder) {
      compare(g, "vs", vertex_stability(g).value, vertex_stability_oracle(g, false));
      compare(g, "ivs", independent_vertex_stability(g).value, vertex_stability_oracle(g, true));
    } else {
      skipped += 2;
    }
    if (g.size() <= kEdgeOracleMaxSize) {
      compare(g, "es", edge_stability(g).value, edge_stability_oracle(g));
    } else {
      ++skipped;
    }
  }
  json j = {{"corpus", corpus.description()},
            {"graphs", corpus.size()},
            {"comparisons", comparisons},
            {"skipped", skipped},
            {"parse_failures", corpus.parse_failures().size()},
            {"mismatches", mismatches}};
  out << j.dump() << '\n';
  return mismatches.empty() ? kOk : kViolation;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chromatic number and chromatic stability invariants of small graphs",
               "chromstab"};
  app.require_subcommand(1);

  InputFlags inv_in;
  bool chi = false, vs = false, ivs = false, es = false, all = false, pretty = false;
  auto* invariants = app.add_subcommand("invariants", "Compute chi, vs, ivs, es with witnesses");
  add_graph_flags(invariants, inv_in);
  invariants->add_flag("--chi", chi, "Chromatic number");
  invariants->add_flag("--vs", vs, "Chromatic vertex stability number");
  invariants->add_flag("--ivs", ivs, "Independent chromatic vertex stability number");
  invariants->add_flag("--es", es, "Chromatic edge stability number");
  invariants->add_flag("--all", all, "All of the above (default)");
  invariants->add_flag("--pretty", pretty, "Human-readable table instead of JSON");

  std::string gen_family;
  std::vector<int> gen_params;
  std::string format = "g6";
  std::string sidecar;
  auto* generate = app.add_subcommand("generate", "Emit a named construction");
  generate->add_option("family", gen_family, "Family name")->required();
  generate->add_option("params", gen_params, "Integer parameters");
  generate->add_option("--format", format, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));
  generate->add_option("--sidecar", sidecar, "Write expected invariants as JSON here");

  InputFlags ver_in;
  std::vector<std::string> check_names;
  int workers = 1;
  int offset = 2;
  bool timing = false;
  std::string out_dir;
  std::string csv;
  bool ver_pretty = false;
  auto* verify = app.add_subcommand("verify", "Run theorem and bound checks over a corpus");
  add_corpus_flags(verify, ver_in);
  verify->add_option("--check", check_names,
                     "theorem-main theorem-es nordhaus-gaddum lemma-delta bounds problem1 all");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--problem1-offset", offset, "problem1 hypothesis: 2*chi >= delta + offset");
  verify->add_flag("--timing", timing, "Record wall time (reports are no longer byte-stable)");
  verify->add_option("--out-dir", out_dir, "Write one JSON report per check here");
  verify->add_option("--csv", csv, "Write a one-row-per-check CSV summary here");
  verify->add_flag("--pretty", ver_pretty, "Human-readable summary instead of JSON");

  InputFlags search_in;
  int search_offset = 2;
  int search_workers = 1;
  bool search_timing = false;
  auto* search = app.add_subcommand("search", "Counterexample search for vs = ivs");
  add_corpus_flags(search, search_in);
  search->add_option("--threshold-offset", search_offset,
                     "Hypothesis 2*chi >= delta + offset (default 2)");
  search->add_option("--workers", search_workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--timing", search_timing, "Record wall time");

  InputFlags diff_in;
  bool force = false;
  auto* oracle_diff = app.add_subcommand("oracle-diff", "Cross-check solvers against brute force");
  add_corpus_flags(oracle_diff, diff_in);
  oracle_diff->add_flag("--force", force, "Allow corpora beyond n = 5");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chromstab: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*invariants) return cmd_invariants(inv_in, chi, vs, ivs, es, all, pretty, out);
    if (*generate) return cmd_generate(gen_family, gen_params, format, sidecar, out);
    if (*verify) {
      return cmd_verify(ver_in, check_names, workers, offset, timing, out_dir, csv, ver_pretty, out,
                        err);
    }
    if (*search) return cmd_search(search_in, search_offset, search_workers, search_timing, out);
    if (*oracle_diff) return cmd_oracle_diff(diff_in, force, out);
  } catch (const PreconditionError& e) {
    err << "chromstab: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "chromstab: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "chromstab: " << e.what() << '\n';
    return kUsage;
  } catch (const CorpusIoError& e) {
    err << "chromstab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "chromstab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chromstab::cli

#include <gtest/gtest.h>

#include <sstream>

#include "chromstab/constructions.hpp"
#include "chromstab/verify.hpp"
#include "support/test_oracles.hpp"

namespace chromstab {
namespace {

Graph cycle(int n) { return standard_graph(StandardKind::cycle, n); }
Graph complete(int n) { return standard_graph(StandardKind::complete, n); }
Graph path(int n) { return standard_graph(StandardKind::path, n); }

void expect_holds(const CheckOutcome& o) {
  EXPECT_TRUE(o.hypothesis_applies) << o.check_id << " " << o.graph;
  EXPECT_EQ(o.holds, std::optional<bool>(true)) << o.check_id << " " << o.graph;
}

void expect_not_applicable(const CheckOutcome& o) {
  EXPECT_FALSE(o.hypothesis_applies) << o.check_id << " " << o.graph;
  EXPECT_FALSE(o.holds.has_value());
}

TEST(TheoremMainTest, Examples) {
  const CheckOutcome k5 = check_theorem_main(complete(5));
  expect_holds(k5);
  EXPECT_EQ(k5.data["vs"]["value"], 1);
  expect_holds(check_theorem_main(petersen()));
  expect_not_applicable(check_theorem_main(gnk(2, 3).graph));
  EXPECT_THROW(check_theorem_main(Graph(3)), PreconditionError);
}

TEST(TheoremEsTest, Examples) {
  expect_holds(check_theorem_es(complete(4)));
  expect_holds(check_theorem_es(cycle(7)));
  const Graph sharp = two_cliques_sharing_vertex(4).graph;
  const CheckOutcome o = check_theorem_es(sharp);
  expect_not_applicable(o);
  EXPECT_EQ(o.data["chi"], 3);
  EXPECT_EQ(o.data["delta"], 4);
  EXPECT_NE(vertex_stability(sharp).value, edge_stability(sharp).value);
}

TEST(NordhausGaddumTest, Examples) {
  const CheckOutcome c5 = check_nordhaus_gaddum(cycle(5));
  expect_holds(c5);
  EXPECT_EQ(c5.data["sum"], 2);
  expect_not_applicable(check_nordhaus_gaddum(complete(6)));
  expect_holds(check_nordhaus_gaddum(path(4)));
  EXPECT_NO_THROW(check_nordhaus_gaddum(Graph(3)));
  expect_not_applicable(check_nordhaus_gaddum(Graph(3)));
}

TEST(LemmaDeltaTest, Examples) {
  const CheckOutcome p3 = check_lemma_delta(path(3));
  expect_holds(p3);
  EXPECT_EQ(p3.data["max_degree_witness"], 1);
  expect_not_applicable(check_lemma_delta(cycle(4)));
  expect_not_applicable(check_lemma_delta(two_cliques_sharing_vertex(4).graph));
}

TEST(BoundsTest, Examples) {
  const CheckOutcome pet = check_bounds(petersen());
  expect_holds(pet);
  EXPECT_EQ(pet.data["vs"], 3);
  EXPECT_EQ(pet.data["ivs"], 3);
  EXPECT_EQ(pet.data["floor_n_over_chi"], 3);
  expect_holds(check_bounds(complete(2)));
  const CheckOutcome g23 = check_bounds(gnk(2, 3).graph);
  expect_holds(g23);
  EXPECT_EQ(g23.data["vs"], 4);
  EXPECT_EQ(g23.data["ivs"], 6);
  EXPECT_EQ(g23.data["floor_n_over_chi"], 6);
}

TEST(Problem1Test, BoundaryWitnessesFallOutside) {
  for (const Graph& g : {g_k(3).graph, g_k(5).graph, gnk(2, 3).graph}) {
    expect_not_applicable(check_problem1(g));
    EXPECT_NE(vertex_stability(g).value, independent_vertex_stability(g).value);
  }
  // The weaker threshold 2 chi >= Delta + 1 does reach g_k and fails there.
  const CheckOutcome weak = check_problem1(g_k(3).graph, 1);
  EXPECT_TRUE(weak.hypothesis_applies);
  EXPECT_EQ(weak.holds, std::optional<bool>(false));
}

TEST(Problem1Test, SearchReportsEvidenceOnly) {
  const Corpus c = Corpus::from_graphs({g_k(3).graph, g_k(5).graph}, "boundary");
  const VerificationReport r = search_problem1(c);
  EXPECT_EQ(r.graphs_scanned, 2u);
  EXPECT_EQ(r.hypothesis_hits, 0u);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_TRUE(r.note);
  EXPECT_NE(r.note->find("evidence, not proof"), std::string::npos);
}

TEST(BoundaryFidelityTest, SharpnessGraphSplitsTheTwoPredicates) {
  GraphProfile p(two_cliques_sharing_vertex(4).graph);
  EXPECT_FALSE(check_theorem_es(p).hypothesis_applies);
  const CheckOutcome o = check_problem1(p);
  expect_holds(o);
}

TEST(RunCheckTest, EdgelessGraphsNeverApply) {
  GraphProfile p{Graph(4)};
  for (CheckId id : all_checks()) expect_not_applicable(run_check(id, p));
}

TEST(CheckIdTest, Names) {
  for (CheckId id : all_checks()) EXPECT_EQ(parse_check_id(to_string(id)), id);
  EXPECT_EQ(to_string(CheckId::theorem_main), "theorem-main");
  EXPECT_FALSE(parse_check_id("theorem_main"));
}

TEST(CheckOutcomeTest, HoldsIsNullWhenNotApplicable) {
  const nlohmann::json j = check_theorem_main(gnk(2, 3).graph);
  EXPECT_TRUE(j["holds"].is_null());
  EXPECT_FALSE(j["hypothesis_applies"].get<bool>());
}

TEST(RunCorpusTest, EnumerationOfFour) {
  const std::vector<CheckId> checks{CheckId::theorem_main};
  const auto reports = run_corpus(Corpus::enumeration(4, 4), checks);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].graphs_scanned, 64u);
  EXPECT_TRUE(reports[0].violations.empty());
  EXPECT_GT(reports[0].hypothesis_hits, 0u);
}

TEST(RunCorpusTest, ReportsDoNotDependOnWorkerCount) {
  const Corpus corpus = Corpus::enumeration(5, 5);
  const std::vector<CheckId> checks = all_checks();
  RunOptions one{.workers = 1, .record_timing = false};
  RunOptions four{.workers = 4, .record_timing = false};
  const nlohmann::json a = run_corpus(corpus, checks, one);
  const nlohmann::json b = run_corpus(corpus, checks, four);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(RunCorpusTest, HitsMatchDirectCount) {
  const Corpus corpus = Corpus::enumeration(1, 4);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < corpus.size(); ++i) {
    const Graph g = corpus.at(i);
    if (!g.has_edge()) continue;
    const int chi = testing::brute_chi(g);
    const int delta = max_degree(g);
    hits += chi == delta || chi == delta + 1;
  }
  const std::vector<CheckId> checks{CheckId::theorem_main};
  EXPECT_EQ(run_corpus(corpus, checks)[0].hypothesis_hits, hits);
}

TEST(RunCorpusTest, CountsParseFailures) {
  std::istringstream in(">>graph6<<Bw\n# comment\nA_\nnot-a-graph\n\nC~\n");
  const Corpus corpus = Corpus::from_graph6(in, "inline");
  ASSERT_EQ(corpus.size(), 3u);
  ASSERT_EQ(corpus.parse_failures().size(), 1u);
  EXPECT_EQ(corpus.parse_failures()[0].line, 4u);
  const std::vector<CheckId> checks{CheckId::bounds};
  const auto reports = run_corpus(corpus, checks);
  EXPECT_EQ(reports[0].parse_failures.size(), 1u);
  EXPECT_EQ(reports[0].graphs_scanned, 3u);
  const nlohmann::json j = reports[0];
  EXPECT_EQ(j["parse_failures"], 1);
  EXPECT_EQ(j["parse_failure_lines"][0]["line"], 4);
}

TEST(RunCorpusTest, MissingFileIsAnIoError) {
  EXPECT_THROW(Corpus::from_graph6_file("/nonexistent/chromstab.g6"), CorpusIoError);
}

TEST(RunCorpusTest, RejectsZeroWorkers) {
  const std::vector<CheckId> checks{CheckId::bounds};
  EXPECT_THROW(run_corpus(Corpus::enumeration(2, 2), checks, {.workers = 0}), std::invalid_argument);
}

TEST(RunCorpusTest, ProvedStatementsHoldThroughFive) {
  const auto reports = run_corpus(Corpus::enumeration(1, 5), all_checks());
  for (const auto& r : reports) EXPECT_TRUE(r.violations.empty()) << r.check_id;
}

TEST(CsvSummaryTest, OneRowPerReport) {
  const std::vector<CheckId> checks{CheckId::bounds, CheckId::problem1};
  const auto reports = run_corpus(Corpus::enumeration(3, 3), checks);
  const std::string csv = csv_summary(reports);
  EXPECT_EQ(csv,
            "check_id,corpus,graphs_scanned,hypothesis_hits,violations,parse_failures\n"
            "bounds,\"enumerate n=3\",8,7,0,0\n"
            "problem1,\"enumerate n=3\",8,7,0,0\n");
}

}  // namespace
}  // namespace chromstab

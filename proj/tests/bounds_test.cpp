#include "mdim/bounds.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "mdim/edge_list.hpp"
#include "mdim/report.hpp"
#include "oracles.hpp"

namespace mdim {
namespace {

Graph bowtie() { return named_family("bowtie", {}); }
Graph c6() { return named_family("cycle", {{"g", 6}}); }

// C4 on 0..3 with leaves 4 and 5 at vertex 0.
Graph c4_two_leaves() {
  return Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}});
}

const ClaimVerdict* find_claim(const BoundsCertificate& cert, const std::string& name) {
  for (const auto& v : cert.claims) {
    if (v.claim == name) return &v;
  }
  return nullptr;
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Graph::build(1, {})), GraphClass::kPath);
  EXPECT_EQ(classify(Graph::build(2, {{0, 1}})), GraphClass::kPath);
  EXPECT_EQ(classify(named_family("star", {{"leaves", 3}})), GraphClass::kTree);
  EXPECT_EQ(classify(c6()), GraphClass::kUnicyclic);
  EXPECT_EQ(classify(bowtie()), GraphClass::kCactus);
  // K4 minus an edge: two triangles sharing edge 1-2.
  EXPECT_EQ(classify(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})),
            GraphClass::kGeneral);
}

TEST(UnicyclicBounds, Examples) {
  EXPECT_EQ(unicyclic_bounds(c6()), (Bounds{2, 3}));
  EXPECT_EQ(unicyclic_bounds(named_family("tadpole", {{"g", 5}, {"tail", 1}})), (Bounds{2, 3}));
  EXPECT_EQ(unicyclic_bounds(c4_two_leaves()), (Bounds{2, 3}));
  EXPECT_THROW(unicyclic_bounds(bowtie()), StructureError);
  EXPECT_THROW(unicyclic_bounds(named_family("path", {{"n", 4}})), StructureError);
}

TEST(CactusBounds, Examples) {
  EXPECT_EQ(cactus_bounds(bowtie()), (Bounds{2, 4}));
  Graph chain = named_family("theta-free-cactus-chain", {{"count", 2}, {"g", 3}, {"gap", 2}});
  EXPECT_EQ(cactus_bounds(chain), (Bounds{2, 4}));
  EXPECT_EQ(oracle::branch_counts(chain), (std::vector<std::size_t>{1, 1}));
  EXPECT_THROW(cactus_bounds(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})),
               StructureError);
  EXPECT_THROW(cactus_bounds(named_family("star", {{"leaves", 4}})), StructureError);
}

TEST(CactusBounds, MatchOracleFormula) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::size_t c = 1 + seed % 3;
    Graph g = random_cactus(2 * c + 1 + seed % 12, c, seed, {3, 6});
    Bounds b = cactus_bounds(g);
    EXPECT_EQ(b.lower, oracle::lower_bound(g)) << to_edge_list(g);
    EXPECT_EQ(b.upper, b.lower + c);
    if (c == 1) EXPECT_EQ(b, unicyclic_bounds(g));
  }
}

TEST(ConstructGenerator, Examples) {
  GeneratorReport r = construct_generator(c6());
  EXPECT_EQ(r.cardinality, 3u);
  EXPECT_TRUE(r.is_vertex_generator);
  EXPECT_TRUE(r.is_edge_generator);

  GeneratorReport star = construct_generator(named_family("star", {{"leaves", 3}}));
  EXPECT_EQ(star.S, (VertexSet{1, 2}));
  EXPECT_TRUE(star.is_vertex_generator && star.is_edge_generator);

  GeneratorReport bt = construct_generator(bowtie());
  EXPECT_LE(bt.cardinality, 4u);
  EXPECT_TRUE(bt.is_vertex_generator && bt.is_edge_generator);

  EXPECT_EQ(construct_generator(named_family("path", {{"n", 5}})).S, (VertexSet{0}));
  EXPECT_TRUE(construct_generator(Graph::build(1, {})).S.empty());
  EXPECT_THROW(construct_generator(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})),
               StructureError);
}

TEST(ConstructGenerator, ResolvesAndRespectsUpperBound) {
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    Graph g = [&] {
      switch (seed % 3) {
        case 0: return random_tree(3 + seed % 14, seed);
        case 1: return random_unicyclic(5 + seed % 12, 3 + seed % 3, seed);
        default: return random_cactus(7 + seed % 10, 2 + seed % 2, seed, {3, 5});
      }
    }();
    GeneratorReport r = construct_generator(g);
    auto d = oracle::floyd_warshall(g);
    EXPECT_TRUE(oracle::resolves_vertices(d, r.S)) << to_edge_list(g);
    EXPECT_TRUE(oracle::resolves_edges(d, g.edges(), r.S)) << to_edge_list(g);
    EXPECT_TRUE(r.is_vertex_generator && r.is_edge_generator);
    EXPECT_EQ(r.cardinality, r.S.size());
    std::size_t c = g.cyclomatic_number();
    std::size_t upper = c == 0 ? std::max<std::size_t>(oracle::legs_L(g), 1)
                               : oracle::lower_bound(g) + c;
    EXPECT_LE(r.S.size(), upper) << to_edge_list(g);
  }
}

TEST(ConstructGenerator, UnicyclicWithinOneOfOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_unicyclic(5 + seed % 8, 3 + seed % 4, seed);
    auto r = construct_generator(g);
    EXPECT_LE(r.cardinality, oracle::brute_force(g, false).dim + 1);
    EXPECT_LE(r.cardinality, oracle::brute_force(g, true).dim + 1);
  }
}

TEST(CheckTheorems, PathFive) {
  auto cert = check_theorems(named_family("path", {{"n", 5}}));
  EXPECT_EQ(cert.graph_class, GraphClass::kPath);
  EXPECT_EQ(cert.dim, 1u);
  EXPECT_EQ(cert.edim, 1u);
  EXPECT_FALSE(cert.bounds.has_value());
  EXPECT_TRUE(cert.all_ok());
  const auto* conj = find_claim(cert, "conjecture");
  ASSERT_NE(conj, nullptr);
  EXPECT_EQ(conj->status, ClaimStatus::kPass);
}

TEST(CheckTheorems, K2IsTheDocumentedException) {
  auto cert = check_theorems(Graph::build(2, {{0, 1}}));
  EXPECT_EQ(cert.dim, 1u);
  EXPECT_EQ(cert.edim, 0u);
  EXPECT_EQ(cert.cyclomatic, 0u);
  const auto* conj = find_claim(cert, "conjecture");
  ASSERT_NE(conj, nullptr);
  EXPECT_EQ(conj->status, ClaimStatus::kException);
  EXPECT_TRUE(cert.all_ok());
}

TEST(CheckTheorems, UnicyclicClaimsPass) {
  Graph g = random_unicyclic(10, 4, 17);
  auto cert = check_theorems(g);
  EXPECT_EQ(cert.graph_class, GraphClass::kUnicyclic);
  ASSERT_TRUE(cert.bounds.has_value());
  EXPECT_EQ(cert.bounds->upper, cert.bounds->lower + 1);
  for (const char* name : {"unicyclic_dim_bounds", "unicyclic_edim_bounds", "unicyclic_gap",
                           "construction"}) {
    const auto* v = find_claim(cert, name);
    ASSERT_NE(v, nullptr) << name;
    EXPECT_EQ(v->status, ClaimStatus::kPass) << name;
    EXPECT_TRUE(v->proven);
  }
}

TEST(CheckTheorems, BowtieCactusClaimsPass) {
  auto cert = check_theorems(bowtie());
  EXPECT_EQ(cert.graph_class, GraphClass::kCactus);
  EXPECT_EQ(cert.per_cycle_b, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(cert.bounds, (Bounds{2, 4}));
  EXPECT_TRUE(cert.all_ok());
  EXPECT_NE(find_claim(cert, "cactus_gap"), nullptr);
}

TEST(CheckTheorems, GeneralGraphsOnlyGetTheEmpiricalClaim) {
  auto cert = check_theorems(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(cert.graph_class, GraphClass::kGeneral);
  ASSERT_EQ(cert.claims.size(), 1u);
  EXPECT_EQ(cert.claims[0].claim, "conjecture");
  EXPECT_FALSE(cert.claims[0].proven);
}

TEST(CheckTheorems, CapPropagates) {
  SolverOptions tight;
  tight.max_order = 5;
  EXPECT_THROW(check_theorems(c6(), tight), InstanceTooLarge);
}

ScanConfig scan_config(Family family, std::size_t trials) {
  ScanConfig cfg;
  cfg.gen.family = family;
  cfg.gen.n_min = 4;
  cfg.gen.n_max = 10;
  cfg.gen.cycles_min = 2;
  cfg.gen.cycles_max = 2;
  cfg.trials = trials;
  cfg.seed = 11;
  return cfg;
}

std::string csv(const ScanReport& r) {
  std::ostringstream out;
  write_scan_csv(out, r);
  return out.str();
}

TEST(ConjectureScan, TreesHaveNoDifferencesExceptK2) {
  auto cfg = scan_config(Family::kTree, 100);
  cfg.gen.n_min = 2;
  auto report = conjecture_scan(cfg);
  ASSERT_EQ(report.rows.size(), 100u);
  for (const auto& row : report.rows) {
    if (row.is_k2) {
      EXPECT_EQ(row.diff, 1);
    } else {
      EXPECT_EQ(row.diff, 0);
    }
  }
  EXPECT_EQ(report.violations, 0u);
}

TEST(ConjectureScan, CactusGapsStayWithinCycleCount) {
  auto cfg = scan_config(Family::kCactus, 100);
  cfg.gen.n_min = 5;
  cfg.gen.n_max = 12;
  auto report = conjecture_scan(cfg);
  EXPECT_EQ(report.violations, 0u);
  for (const auto& row : report.rows) {
    EXPECT_LE(static_cast<std::size_t>(std::llabs(row.diff)), row.c);
    ASSERT_TRUE(row.bounds.has_value());
    EXPECT_EQ(row.b_list.size(), 2u);
  }
}

TEST(ConjectureScan, RowsAreInTrialOrderAndWorkerIndependent) {
  auto cfg = scan_config(Family::kGeneral, 40);
  auto serial = conjecture_scan(cfg);
  cfg.workers = 4;
  auto parallel = conjecture_scan(cfg);
  for (std::size_t k = 0; k < serial.rows.size(); ++k) EXPECT_EQ(serial.rows[k].trial, k);
  EXPECT_EQ(csv(serial), csv(parallel));
  EXPECT_EQ(to_json(serial).dump(), to_json(parallel).dump());
}

TEST(ConjectureScan, RowMatchesDirectEvaluation) {
  auto cfg = scan_config(Family::kGeneral, 10);
  auto report = conjecture_scan(cfg);
  for (const auto& row : report.rows) {
    Graph g = generate(cfg.gen, cfg.seed + row.trial);
    EXPECT_EQ(row.graph, row.violation ? to_edge_list(g) : "");
    EXPECT_EQ(row.dim, oracle::brute_force(g, false).dim);
    EXPECT_EQ(row.edim, oracle::brute_force(g, true).dim);
    EXPECT_EQ(row.c, 2u);
    EXPECT_FALSE(row.bounds.has_value());
  }
}

TEST(ConjectureScan, OversizedSamplesAreSkipped) {
  auto cfg = scan_config(Family::kTree, 20);
  cfg.gen.n_min = 8;
  cfg.gen.n_max = 12;
  SolverOptions opts;
  opts.max_order = 9;
  auto report = conjecture_scan(cfg, opts);
  EXPECT_EQ(report.rows.size() + report.skipped, 20u);
  EXPECT_GT(report.skipped, 0u);
  for (const auto& row : report.rows) EXPECT_LE(row.n, 9u);
}

TEST(ScanCsv, HeaderAndRowLayout) {
  EXPECT_EQ(scan_csv_header(), "trial,n,m,c,L,b_list,lower,upper,dim,edim,diff,violation");
  ScanRow row;
  row.trial = 3;
  row.n = 5;
  row.m = 6;
  row.c = 2;
  row.b_list = {1, 1};
  row.bounds = Bounds{2, 4};
  row.dim = 2;
  row.edim = 3;
  row.diff = -1;
  EXPECT_EQ(scan_csv_row(row), "3,5,6,2,0,1;1,2,4,2,3,-1,0");
  row.bounds.reset();
  row.b_list.clear();
  EXPECT_EQ(scan_csv_row(row), "3,5,6,2,0,,,,2,3,-1,0");
}

}  // namespace
}  // namespace mdim

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lemma_checks.hpp"
#include "mdim/bounds.hpp"
#include "mdim/cli.hpp"
#include "mdim/edge_list.hpp"
#include "mdim/report.hpp"
#include "mdim/structure.hpp"

namespace {

using namespace mdim;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(const std::string& why, const Graph& g) {
  return {false, why + " on\n" + to_edge_list(g)};
}

std::vector<Graph> tree_corpus() {
  std::vector<Graph> out;
  GenConfig cfg;
  cfg.family = Family::kTree;
  cfg.n_min = 4;
  cfg.n_max = 14;
  for (std::uint64_t seed = 0; out.size() < 300; ++seed) {
    Graph g = generate(cfg, 100000 + seed);
    if (!g.is_path()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> unicyclic_corpus() {
  std::vector<Graph> out;
  GenConfig cfg;
  cfg.family = Family::kUnicyclic;
  cfg.n_min = 5;
  cfg.n_max = 14;
  cfg.cycle_len_range = {3, 14};
  for (std::uint64_t seed = 0; seed < 300; ++seed) out.push_back(generate(cfg, 200000 + seed));
  return out;
}

std::vector<Graph> cactus_corpus() {
  std::vector<Graph> out;
  GenConfig cfg;
  cfg.family = Family::kCactus;
  cfg.n_min = 7;
  cfg.n_max = 14;
  cfg.cycles_min = 2;
  cfg.cycles_max = 3;
  cfg.cycle_len_range = {3, 6};
  for (std::uint64_t seed = 0; seed < 200; ++seed) out.push_back(generate(cfg, 300000 + seed));
  return out;
}

struct Exact {
  std::size_t dim;
  std::size_t edim;
};

std::vector<Exact> solve_all(const std::vector<Graph>& corpus) {
  SolverOptions opts;
  opts.workers = 4;
  std::vector<Exact> out;
  for (const Graph& g : corpus) {
    out.push_back({metric_dimension(g, opts).dimension, edge_metric_dimension(g, opts).dimension});
  }
  return out;
}

std::size_t gap(const Exact& e) { return e.dim > e.edim ? e.dim - e.edim : e.edim - e.dim; }

}  // namespace

int main() {
  const auto trees = tree_corpus();
  const auto unis = unicyclic_corpus();
  const auto cacti = cactus_corpus();
  const auto tree_x = solve_all(trees);
  const auto uni_x = solve_all(unis);
  const auto cactus_x = solve_all(cacti);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("tree equality dim = edim = L on 300 trees, paths and K2 separately", [&] {
    for (std::size_t k = 0; k < trees.size(); ++k) {
      const Graph& g = trees[k];
      std::size_t L = decompose_threads(g).L;
      if (L != oracle::legs_L(g)) return fail("L disagrees with leg count", g);
      if (tree_x[k].dim != L || tree_x[k].edim != L) return fail("dimension differs from L", g);
    }
    for (std::size_t n = 3; n <= 14; ++n) {
      Graph p = named_family("path", {{"n", n}});
      if (metric_dimension(p).dimension != 1 || edge_metric_dimension(p).dimension != 1) {
        return fail("path dimension is not 1", p);
      }
    }
    Graph k2 = Graph::build(2, {{0, 1}});
    if (metric_dimension(k2).dimension != 1 || edge_metric_dimension(k2).dimension != 0) {
      return fail("K2 dimensions are not (1, 0)", k2);
    }
    return Outcome{true, std::to_string(trees.size()) + " trees, paths 3..14, K2"};
  });

  criteria.emplace_back("unicyclic dimensions in {LB, LB+1}, both values attained", [&] {
    bool hit_lower = false, hit_upper = false;
    for (std::size_t k = 0; k < unis.size(); ++k) {
      const Graph& g = unis[k];
      Bounds b = unicyclic_bounds(g);
      if (b.lower != oracle::lower_bound(g)) return fail("LB disagrees with oracle formula", g);
      if (b.upper != b.lower + 1) return fail("upper is not LB+1", g);
      for (std::size_t v : {uni_x[k].dim, uni_x[k].edim}) {
        if (v < b.lower || v > b.upper) return fail("dimension outside {LB, LB+1}", g);
        (v == b.lower ? hit_lower : hit_upper) = true;
      }
    }
    if (!hit_lower || !hit_upper) {
      return Outcome{false, std::string("attained LB: ") + (hit_lower ? "yes" : "no") +
                                ", LB+1: " + (hit_upper ? "yes" : "no")};
    }
    return Outcome{true, "300 graphs, both LB and LB+1 attained"};
  });

  criteria.emplace_back("unicyclic |dim - edim| <= 1", [&] {
    std::size_t differ = 0;
    for (std::size_t k = 0; k < unis.size(); ++k) {
      if (gap(uni_x[k]) > 1) return fail("|dim - edim| > 1", unis[k]);
      if (gap(uni_x[k]) == 1) ++differ;
    }
    return Outcome{true, std::to_string(differ) + " of 300 with dim != edim"};
  });

  criteria.emplace_back("cactus LB <= dim, edim <= LB + c on 200 cacti, c in {2,3}", [&] {
    for (std::size_t k = 0; k < cacti.size(); ++k) {
      const Graph& g = cacti[k];
      Bounds b = cactus_bounds(g);
      std::size_t c = find_cycles(g).count();
      if (c < 2 || c > 3) return fail("cycle count outside {2,3}", g);
      if (b.lower != oracle::lower_bound(g)) return fail("LB disagrees with oracle formula", g);
      if (b.upper != b.lower + c) return fail("upper is not LB+c", g);
      for (std::size_t v : {cactus_x[k].dim, cactus_x[k].edim}) {
        if (v < b.lower || v > b.upper) return fail("dimension outside [LB, LB+c]", g);
      }
    }
    return Outcome{true, "200 cacti"};
  });

  criteria.emplace_back("cactus |dim - edim| <= c", [&] {
    std::size_t worst = 0;
    for (std::size_t k = 0; k < cacti.size(); ++k) {
      std::size_t c = cacti[k].cyclomatic_number();
      if (gap(cactus_x[k]) > c) return fail("|dim - edim| > c", cacti[k]);
      worst = std::max(worst, gap(cactus_x[k]));
    }
    return Outcome{true, "largest gap " + std::to_string(worst)};
  });

  criteria.emplace_back("constructed generator resolves vertices and edges within the upper bound", [&] {
    std::size_t checked = 0;
    for (const auto* corpus : {&trees, &unis, &cacti}) {
      for (const Graph& g : *corpus) {
        GeneratorReport r = construct_generator(g);
        auto d = oracle::floyd_warshall(g);
        if (!oracle::resolves_vertices(d, r.S)) return fail("not a metric generator", g);
        if (!oracle::resolves_edges(d, g.edges(), r.S)) return fail("not an edge metric generator", g);
        std::size_t c = g.cyclomatic_number();
        std::size_t upper = c == 0 ? decompose_threads(g).L : cactus_bounds(g).upper;
        if (r.cardinality > upper) return fail("|S| exceeds the upper bound", g);
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " graphs"};
  });

  criteria.emplace_back("lemma suite on 100 unicyclic graphs", [&] {
    for (std::size_t k = 0; k < 100; ++k) {
      const Graph& g = unis[k];
      std::string why = lemma::minimum_generators_are_branch_resolving(g);
      if (why.empty()) why = lemma::geodesic_triples_separate_across_components(g);
      if (why.empty()) why = lemma::same_component_pairs_separated(g, 400000 + k, 20);
      if (why.empty()) why = lemma::branch_resolving_with_triple_generates(g, 500000 + k, 20);
      if (!why.empty()) return fail(why, g);
    }
    return Outcome{true, "minimum generators, geodesic triples, 20 sampled sets per graph"};
  });

  criteria.emplace_back("no generator of size dim-1 or edim-1 exists (n <= 12)", [&] {
    std::size_t checked = 0;
    auto confirm = [&](const Graph& g, const Exact& x) -> Outcome {
      if (g.order() > 12) return Outcome{};
      auto want_v = oracle::brute_force(g, false);
      auto want_e = oracle::brute_force(g, true);
      if (want_v.dim != x.dim || want_e.dim != x.edim) return fail("solver differs from brute force", g);
      ++checked;
      return Outcome{};
    };
    for (std::size_t k = 0; k < trees.size(); ++k) {
      if (auto o = confirm(trees[k], tree_x[k]); !o.ok) return o;
    }
    for (std::size_t k = 0; k < unis.size(); ++k) {
      if (auto o = confirm(unis[k], uni_x[k]); !o.ok) return o;
    }
    for (std::size_t k = 0; k < cacti.size(); ++k) {
      if (auto o = confirm(cacti[k], cactus_x[k]); !o.ok) return o;
    }
    return Outcome{true, std::to_string(checked) + " graphs re-enumerated"};
  });

  criteria.emplace_back("seeded runs produce byte-identical JSON and CSV", [&] {
    auto run = [](std::vector<std::string> args) {
      std::ostringstream out, err;
      int code = cli::run(args, out, err);
      return std::to_string(code) + "\n" + out.str();
    };
    const std::vector<std::vector<std::string>> commands{
        {"scan", "--family", "cactus", "--n", "12", "--n-min", "7", "--cycles", "3", "--cycles-min",
         "2", "--trials", "40", "--seed", "8", "--format", "csv"},
        {"scan", "--family", "general", "--n", "10", "--cycles", "2", "--trials", "30", "--seed",
         "8", "--format", "json"},
        {"check", "--family", "unicyclic", "--n", "13", "--seed", "21"},
        {"analyze", "--family", "cactus", "--n", "14", "--cycles", "3", "--seed", "5"},
        {"gen", "--family", "general", "--n", "11", "--cycles", "3", "--seed", "2"},
    };
    for (const auto& args : commands) {
      std::string first = run(args);
      auto with_workers = args;
      with_workers.insert(with_workers.end(), {"--workers", "4"});
      if (run(args) != first || run(with_workers) != first) {
        return Outcome{false, "output changed between runs of: " + args[0]};
      }
    }
    return Outcome{true, std::to_string(commands.size()) + " commands, serial and 4 workers"};
  });

  criteria.emplace_back("general-graph scan of 200 instances, c in [2,3], n <= 11", [&] {
    ScanConfig cfg;
    cfg.gen.family = Family::kGeneral;
    cfg.gen.n_min = 4;
    cfg.gen.n_max = 11;
    cfg.gen.cycles_min = 2;
    cfg.gen.cycles_max = 3;
    cfg.trials = 200;
    cfg.seed = 600000;
    cfg.workers = 4;
    ScanReport rep = conjecture_scan(cfg);
    if (rep.rows.size() != 200) return Outcome{false, "only " + std::to_string(rep.rows.size()) + " rows"};
    std::map<long long, std::size_t> hist;
    for (const ScanRow& row : rep.rows) {
      ++hist[row.diff];
      if (row.violation) std::cout << "  flagged trial " << row.trial << ":\n" << row.graph;
    }
    std::string detail = "violations=" + std::to_string(rep.violations) + " dim-edim histogram:";
    for (auto [d, count] : hist) detail += " " + std::to_string(d) + ":" + std::to_string(count);
    return Outcome{true, detail};
  });

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " ("
              << o.detail << ")\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

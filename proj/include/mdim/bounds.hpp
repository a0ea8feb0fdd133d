#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "mdim/solver.hpp"
#include "mdim/structure.hpp"

namespace mdim {

enum class GraphClass { kPath, kTree, kUnicyclic, kCactus, kGeneral };

const char* to_string(GraphClass c);

/// Paths (including K1 and K2) are reported as kPath rather than kTree.
GraphClass classify(const Graph& g);
GraphClass classify(const Graph& g, const CycleSet& cs);

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// L + max{2 - b, 0} and one more. Throws StructureError unless unicyclic.
Bounds unicyclic_bounds(const Graph& g);

/// L + sum_i max{2 - b(C_i), 0} and that plus c. Throws StructureError
/// unless g is a cactus with at least one cycle.
Bounds cactus_bounds(const Graph& g);

/// Generator built as leaves of all but one thread per anchor, plus cycle
/// vertices until every cycle has two active vertices, plus one vertex per
/// cycle completing a geodesic triple of active vertices. Trees get the
/// leaf set (or one endpoint for a path). Throws StructureError for graphs
/// that are not cacti.
GeneratorReport construct_generator(const Graph& g);

enum class ClaimStatus { kPass, kFail, kException };

const char* to_string(ClaimStatus s);

struct ClaimVerdict {
  std::string claim;
  /// Proven claims must pass; empirical ones only gather evidence.
  bool proven = true;
  ClaimStatus status = ClaimStatus::kPass;
  std::string detail;
};

struct BoundsCertificate {
  GraphClass graph_class = GraphClass::kGeneral;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t cyclomatic = 0;
  std::size_t L = 0;
  std::vector<std::size_t> per_cycle_b;
  std::optional<Bounds> bounds;
  std::size_t dim = 0;
  VertexSet dim_witness;
  std::size_t edim = 0;
  VertexSet edim_witness;
  std::optional<GeneratorReport> constructed;
  std::vector<ClaimVerdict> claims;

  bool all_ok() const;
};

/// Classifies g, evaluates every applicable bound against the exact solver
/// and records one verdict per claim. Throws InstanceTooLarge above the cap.
BoundsCertificate check_theorems(const Graph& g, const SolverOptions& opts = {});

struct ScanConfig {
  GenConfig gen;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  /// Instances evaluated concurrently.
  unsigned workers = 1;
};

struct ScanRow {
  std::size_t trial = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t L = 0;
  std::vector<std::size_t> b_list;
  std::optional<Bounds> bounds;
  std::size_t dim = 0;
  std::size_t edim = 0;
  long long diff = 0;
  bool violation = false;
  bool is_k2 = false;
  /// Edge list of the instance, kept for violations.
  std::string graph;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::size_t skipped = 0;
  std::size_t violations = 0;
};

/// Samples gen with per-trial seed (seed + trial), records (c, dim, edim)
/// and flags |dim - edim| > c (K2 excepted). Rows are in trial order.
ScanReport conjecture_scan(const ScanConfig& cfg, const SolverOptions& opts = {});

}  // namespace mdim

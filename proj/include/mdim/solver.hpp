#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Exact search refused: too many vertices, or no generator within the
/// configured subset-size limit.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  /// Largest order accepted by the exact search. Hard ceiling 64.
  std::size_t max_order = 20;
  /// Largest subset size tried; nullopt means n - 1 (or 0 for K1).
  std::optional<std::size_t> max_subset_size;
  /// Worker threads used within one subset-size level.
  unsigned workers = 1;
};

struct DimensionResult {
  std::size_t dimension = 0;
  /// Lexicographically first generator of minimum size.
  VertexSet witness;
};

struct GeneratorReport {
  VertexSet S;
  bool is_vertex_generator = false;
  bool is_edge_generator = false;
  std::size_t cardinality = 0;
};

/// v -> (d(v,s))_{s in S} is injective on V(G).
bool is_metric_generator(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> S);
/// e -> (d(e,s))_{s in S} is injective on E(G), with d(e,s) the nearer endpoint.
bool is_edge_metric_generator(const Graph& g, const DistanceMatrix& dm,
                              std::span<const Vertex> S);

GeneratorReport evaluate_generator(const Graph& g, VertexSet S);

DimensionResult metric_dimension(const Graph& g, const SolverOptions& opts = {});
DimensionResult edge_metric_dimension(const Graph& g, const SolverOptions& opts = {});

enum class Resolve { kVertices, kEdges };

/// Every generator of exactly `size` vertices, in lexicographic order.
/// Meant for small graphs; subject to the same order cap as the solver.
std::vector<VertexSet> all_generators_of_size(const Graph& g, Resolve what, std::size_t size,
                                              const SolverOptions& opts = {});

}  // namespace mdim

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdim {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered edge stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  kEmpty,
  kIdOutOfRange,
  kLoop,
  kDuplicateEdge,
  kDisconnected,
  kNotAnEdge,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Hop-count distances between every pair of vertices, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex a, Vertex b) const { return d_[a * n_ + b]; }
  std::uint32_t& at(Vertex a, Vertex b) { return d_[a * n_ + b]; }
  std::span<const std::uint32_t> row(Vertex a) const {
    return {d_.data() + a * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Simple connected undirected graph on vertices 0..n-1. Immutable; the
/// distance matrix is computed once at construction and shared by copies.
class Graph {
 public:
  /// Validates and canonicalizes. Throws GraphError with a distinct kind for
  /// each rejection reason.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  /// |E| - |V| + 1
  std::size_t cyclomatic_number() const { return size() + 1 - order(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of the edge in edges(), if present.
  std::optional<std::size_t> edge_index(Edge e) const;

  const DistanceMatrix& distances() const { return *distances_; }

  bool is_path() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::shared_ptr<const DistanceMatrix> distances_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// min{d(u,s), d(v,s)} for e = uv. Throws GraphError(kNotAnEdge).
std::uint32_t edge_vertex_distance(const Graph& g, Edge e, Vertex s);

/// Merges the endpoints of e into the smaller id, drops the loop and parallel
/// edges, and renumbers the remaining vertices to 0..n-2 in order.
Graph contract_edge(const Graph& g, Edge e);

/// Subgraph induced by `vertices` (sorted). Vertex k of the result is
/// vertices[k]. Throws GraphError if the induced subgraph is disconnected.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace mdim

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Raised by cactus-only operations on graphs whose cycles share edges, or
/// by cycle operations on acyclic graphs.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cycles of a graph. For a cactus these are all of its cycles; otherwise
/// they form the fundamental cycle basis of a DFS tree and is_cactus is false.
struct CycleSet {
  /// Each cycle starts at its smallest vertex and continues toward the
  /// smaller of that vertex's two cycle neighbours. Cycles are sorted.
  std::vector<std::vector<Vertex>> cycles;
  /// Only populated for a cactus.
  std::map<Edge, std::size_t> edge_to_cycle;
  std::size_t cyclomatic_number = 0;
  bool is_cactus = true;

  std::size_t count() const { return cycles.size(); }
  bool on_cycle(std::size_t i, Vertex v) const;
  /// Position of v in cycles[i], if present.
  std::optional<std::size_t> position(std::size_t i, Vertex v) const;
};

CycleSet find_cycles(const Graph& g);

/// Pendant path u_1..u_k hanging from an anchor of degree >= 3; u_k is a leaf.
struct Thread {
  Vertex anchor = 0;
  std::vector<Vertex> path;

  Vertex leaf() const { return path.back(); }
  friend bool operator==(const Thread&, const Thread&) = default;
};

struct ThreadDecomposition {
  /// Sorted by (anchor, first vertex).
  std::vector<Thread> threads;
  /// ell[v] = number of threads anchored at v.
  std::vector<std::size_t> ell;
  /// Sum over v with ell(v) > 1 of ell(v) - 1.
  std::size_t L = 0;
  /// Off-cycle vertices of degree >= 3 and cycle vertices of degree >= 4.
  VertexSet branching_vertices;
};

ThreadDecomposition decompose_threads(const Graph& g);

/// Per-cycle view: the components T_v of G - E(C) rooted at each cycle vertex.
struct CycleActivity {
  std::size_t cycle = 0;
  /// component_of[k] is the vertex set of T_v for v = cycles[cycle][k].
  std::vector<VertexSet> component_of;
  /// root_of[x] is the cycle vertex whose component contains x.
  std::vector<Vertex> root_of;
  VertexSet branch_active;
  std::size_t b = 0;
};

/// Throws StructureError unless `cs` describes a cactus and i is a valid
/// cycle index.
CycleActivity cycle_activity(const Graph& g, const CycleSet& cs, std::size_t i);

/// Cycle vertices whose component contains a vertex of S.
VertexSet s_active_vertices(const Graph& g, const CycleActivity& ca, std::span<const Vertex> S);

/// True iff at every vertex of degree >= 3 at most one anchored thread misses S.
bool is_branch_resolving(const Graph& g, std::span<const Vertex> S);
bool is_branch_resolving(const ThreadDecomposition& td, std::span<const Vertex> S);

/// Three distinct vertices of cycle i whose pairwise distances sum to the
/// cycle length. Throws StructureError when a vertex is not on the cycle.
bool is_geodesic_triple(const CycleSet& cs, std::size_t i, const DistanceMatrix& dm,
                        Vertex a, Vertex b, Vertex c);

/// Smallest-id cycle vertex that forms a geodesic triple with some pair of
/// anchors, or nullopt if the anchors already contain a geodesic triple.
/// Throws StructureError with fewer than two distinct anchors on the cycle.
std::optional<Vertex> complete_to_geodesic_triple(const CycleSet& cs, std::size_t i,
                                                  const DistanceMatrix& dm,
                                                  std::span<const Vertex> anchors);

/// Path between two cycles meeting no cycle except at its end vertices. A
/// single-vertex path is a cut vertex shared by both cycles.
struct Connector {
  std::size_t from_cycle = 0;
  std::size_t to_cycle = 0;
  std::vector<Vertex> path;
  friend bool operator==(const Connector&, const Connector&) = default;
};

/// Unicyclic, isometric part of a cactus around one cycle: the cycle, its
/// connectors, and the trees hanging from either.
struct Domain {
  std::size_t cycle = 0;
  VertexSet vertices;
  VertexSet boundary_vertices;
  std::vector<Connector> connectors;
};

std::vector<Domain> domains(const Graph& g, const CycleSet& cs);

}  // namespace mdim

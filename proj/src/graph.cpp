#include "mdim/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mdim {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kEmpty: return "empty graph";
    case GraphErrorKind::kIdOutOfRange: return "vertex id out of range";
    case GraphErrorKind::kLoop: return "loop edge";
    case GraphErrorKind::kDuplicateEdge: return "duplicate edge";
    case GraphErrorKind::kDisconnected: return "disconnected graph";
    case GraphErrorKind::kNotAnEdge: return "not an edge";
  }
  return "unknown";
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void bfs_row(const std::vector<std::vector<Vertex>>& adj, Vertex src,
             std::vector<std::uint32_t>& dist) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : adj[x]) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError(GraphErrorKind::kEmpty, "graph has no vertices");

  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphErrorKind::kIdOutOfRange,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") references a vertex outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::kLoop,
                       "loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError(GraphErrorKind::kDuplicateEdge,
                     "duplicate edge (" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + ")");
  }

  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  auto dm = std::make_shared<DistanceMatrix>(n);
  std::vector<std::uint32_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    bfs_row(g.adjacency_, s, dist);
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] == kUnreached) {
        throw GraphError(GraphErrorKind::kDisconnected,
                         "vertex " + std::to_string(t) + " is unreachable from vertex " +
                             std::to_string(s));
      }
      dm->at(s, t) = dist[t];
    }
  }
  g.distances_ = std::move(dm);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_path() const {
  if (size() + 1 != order()) return false;
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.size() <= 2; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm(g.order());
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    adj[v].assign(nbrs.begin(), nbrs.end());
  }
  std::vector<std::uint32_t> dist(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_row(adj, s, dist);
    for (Vertex t = 0; t < g.order(); ++t) dm.at(s, t) = dist[t];
  }
  return dm;
}

std::uint32_t edge_vertex_distance(const Graph& g, Edge e, Vertex s) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError(GraphErrorKind::kNotAnEdge,
                     "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge");
  }
  const auto& dm = g.distances();
  return std::min(dm(e.u, s), dm(e.v, s));
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError(GraphErrorKind::kNotAnEdge,
                     "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge");
  }
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> out;
  out.reserve(g.size());
  for (const Edge& f : g.edges()) {
    Vertex a = relabel(f.u);
    Vertex b = relabel(f.v);
    if (a != b) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Graph::build(g.order() - 1, out);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<std::int64_t>(k);
  std::vector<Edge> out;
  for (const Edge& f : g.edges()) {
    if (index[f.u] >= 0 && index[f.v] >= 0) {
      out.emplace_back(static_cast<Vertex>(index[f.u]), static_cast<Vertex>(index[f.v]));
    }
  }
  return Graph::build(vertices.size(), out);
}

}  // namespace mdim

#include "mdim/structure.hpp"

#include <algorithm>
#include <queue>

namespace mdim {

namespace {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cyc) {
  auto min_it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), min_it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

void require_cactus_cycle(const CycleSet& cs, std::size_t i) {
  if (!cs.is_cactus) throw StructureError("graph is not a cactus");
  if (i >= cs.count()) {
    throw StructureError("cycle index " + std::to_string(i) + " out of range (" +
                         std::to_string(cs.count()) + " cycles)");
  }
}

// cycles_through[v] lists the indices of the cycles containing v.
std::vector<std::vector<std::size_t>> cycles_through(const Graph& g, const CycleSet& cs) {
  std::vector<std::vector<std::size_t>> through(g.order());
  for (std::size_t i = 0; i < cs.count(); ++i) {
    for (Vertex v : cs.cycles[i]) through[v].push_back(i);
  }
  return through;
}

}  // namespace

bool CycleSet::on_cycle(std::size_t i, Vertex v) const { return position(i, v).has_value(); }

std::optional<std::size_t> CycleSet::position(std::size_t i, Vertex v) const {
  const auto& cyc = cycles.at(i);
  auto it = std::find(cyc.begin(), cyc.end(), v);
  if (it == cyc.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cyc.begin());
}

CycleSet find_cycles(const Graph& g) {
  const std::size_t n = g.order();
  CycleSet cs;
  cs.cyclomatic_number = g.cyclomatic_number();

  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  // cover[x] counts the fundamental cycles using tree edge (parent[x], x).
  std::vector<std::size_t> cover(n, 0);

  std::vector<std::pair<Vertex, std::size_t>> stack;
  stack.emplace_back(0, 0);
  seen[0] = true;
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    auto nbrs = g.neighbors(x);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex y = nbrs[next++];
    if (!seen[y]) {
      seen[y] = true;
      parent[y] = x;
      depth[y] = depth[x] + 1;
      stack.emplace_back(y, 0);
    } else if (y != parent[x] && depth[y] < depth[x]) {
      std::vector<Vertex> cyc;
      for (Vertex z = x; z != y; z = parent[z]) {
        cyc.push_back(z);
        if (++cover[z] > 1) cs.is_cactus = false;
      }
      cyc.push_back(y);
      cs.cycles.push_back(canonical_cycle(std::move(cyc)));
    }
  }
  std::sort(cs.cycles.begin(), cs.cycles.end());

  if (cs.is_cactus) {
    for (std::size_t i = 0; i < cs.count(); ++i) {
      const auto& cyc = cs.cycles[i];
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        cs.edge_to_cycle.emplace(Edge(cyc[k], cyc[(k + 1) % cyc.size()]), i);
      }
    }
  }
  return cs;
}

ThreadDecomposition decompose_threads(const Graph& g) {
  const std::size_t n = g.order();
  ThreadDecomposition td;
  td.ell.assign(n, 0);

  for (Vertex leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    std::vector<Vertex> path{leaf};
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      path.push_back(cur);
      auto nbrs = g.neighbors(cur);
      Vertex nxt = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = nxt;
    }
    if (g.degree(cur) < 3) continue;  // the whole graph is a path
    std::reverse(path.begin(), path.end());
    td.threads.push_back(Thread{cur, std::move(path)});
    ++td.ell[cur];
  }
  std::sort(td.threads.begin(), td.threads.end(), [](const Thread& a, const Thread& b) {
    return std::tie(a.anchor, a.path.front()) < std::tie(b.anchor, b.path.front());
  });
  for (std::size_t l : td.ell) {
    if (l > 1) td.L += l - 1;
  }

  CycleSet cs = find_cycles(g);
  std::vector<bool> on_cycle(n, false);
  for (const auto& cyc : cs.cycles) {
    for (Vertex v : cyc) on_cycle[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= (on_cycle[v] ? 4u : 3u)) td.branching_vertices.push_back(v);
  }
  return td;
}

CycleActivity cycle_activity(const Graph& g, const CycleSet& cs, std::size_t i) {
  require_cactus_cycle(cs, i);
  const auto& cyc = cs.cycles[i];
  const std::size_t n = g.order();

  CycleActivity ca;
  ca.cycle = i;
  ca.component_of.resize(cyc.size());
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  ca.root_of.assign(n, kNone);

  std::vector<bool> on_this(n, false);
  for (Vertex v : cyc) on_this[v] = true;

  for (std::size_t k = 0; k < cyc.size(); ++k) {
    const Vertex root = cyc[k];
    std::queue<Vertex> q;
    q.push(root);
    ca.root_of[root] = root;
    bool active = false;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      ca.component_of[k].push_back(x);
      if (g.degree(x) >= (on_this[x] ? 4u : 3u)) active = true;
      for (Vertex y : g.neighbors(x)) {
        auto it = cs.edge_to_cycle.find(Edge(x, y));
        if (it != cs.edge_to_cycle.end() && it->second == i) continue;
        if (ca.root_of[y] == kNone) {
          ca.root_of[y] = root;
          q.push(y);
        }
      }
    }
    std::sort(ca.component_of[k].begin(), ca.component_of[k].end());
    if (active) ca.branch_active.push_back(root);
  }
  std::sort(ca.branch_active.begin(), ca.branch_active.end());
  ca.b = ca.branch_active.size();
  return ca;
}

VertexSet s_active_vertices(const Graph& g, const CycleActivity& ca, std::span<const Vertex> S) {
  VertexSet active;
  for (Vertex s : S) {
    if (s >= g.order()) throw GraphError(GraphErrorKind::kIdOutOfRange, "vertex not in graph");
    active.push_back(ca.root_of[s]);
  }
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  return active;
}

bool is_branch_resolving(const ThreadDecomposition& td, std::span<const Vertex> S) {
  std::vector<bool> in_s(td.ell.size(), false);
  for (Vertex s : S) {
    if (s < in_s.size()) in_s[s] = true;
  }
  std::vector<std::size_t> uncovered(td.ell.size(), 0);
  for (const Thread& t : td.threads) {
    bool hit = std::any_of(t.path.begin(), t.path.end(), [&](Vertex v) { return in_s[v]; });
    if (!hit && ++uncovered[t.anchor] > 1) return false;
  }
  return true;
}

bool is_branch_resolving(const Graph& g, std::span<const Vertex> S) {
  return is_branch_resolving(decompose_threads(g), S);
}

bool is_geodesic_triple(const CycleSet& cs, std::size_t i, const DistanceMatrix& dm, Vertex a,
                        Vertex b, Vertex c) {
  if (i >= cs.count()) throw StructureError("cycle index out of range");
  for (Vertex v : {a, b, c}) {
    if (!cs.on_cycle(i, v)) {
      throw StructureError("vertex " + std::to_string(v) + " is not on cycle " +
                           std::to_string(i));
    }
  }
  if (a == b || b == c || a == c) return false;
  return dm(a, b) + dm(b, c) + dm(a, c) == cs.cycles[i].size();
}

std::optional<Vertex> complete_to_geodesic_triple(const CycleSet& cs, std::size_t i,
                                                  const DistanceMatrix& dm,
                                                  std::span<const Vertex> anchors) {
  if (i >= cs.count()) throw StructureError("cycle index out of range");
  VertexSet pts(anchors.begin(), anchors.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (Vertex v : pts) {
    if (!cs.on_cycle(i, v)) {
      throw StructureError("anchor " + std::to_string(v) + " is not on cycle " +
                           std::to_string(i));
    }
  }
  if (pts.size() < 2) throw StructureError("need at least two distinct anchors");

  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      for (std::size_t z = y + 1; z < pts.size(); ++z) {
        if (is_geodesic_triple(cs, i, dm, pts[x], pts[y], pts[z])) return std::nullopt;
      }
    }
  }

  VertexSet candidates = cs.cycles[i];
  std::sort(candidates.begin(), candidates.end());
  for (Vertex c : candidates) {
    if (std::binary_search(pts.begin(), pts.end(), c)) continue;
    for (std::size_t x = 0; x < pts.size(); ++x) {
      for (std::size_t y = x + 1; y < pts.size(); ++y) {
        if (is_geodesic_triple(cs, i, dm, pts[x], pts[y], c)) return c;
      }
    }
  }
  // Unreachable: any two cycle vertices extend to a geodesic triple.
  throw StructureError("no geodesic completion found");
}

std::vector<Domain> domains(const Graph& g, const CycleSet& cs) {
  if (!cs.is_cactus) throw StructureError("graph is not a cactus");
  if (cs.count() == 0) throw StructureError("graph has no cycles");
  const std::size_t n = g.order();
  const auto through = cycles_through(g, cs);

  std::vector<Domain> out;
  out.reserve(cs.count());
  for (std::size_t i = 0; i < cs.count(); ++i) {
    Domain dom;
    dom.cycle = i;
    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(n, kNone);
    std::vector<bool> seen(n, false);
    std::vector<bool> on_this(n, false);
    std::queue<Vertex> q;
    for (Vertex v : cs.cycles[i]) {
      on_this[v] = true;
      seen[v] = true;
      q.push(v);
    }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      dom.vertices.push_back(x);
      const bool elsewhere = std::any_of(through[x].begin(), through[x].end(),
                                         [&](std::size_t j) { return j != i; });
      if (elsewhere) dom.boundary_vertices.push_back(x);
      if (elsewhere && !on_this[x]) continue;
      for (Vertex y : g.neighbors(x)) {
        auto it = cs.edge_to_cycle.find(Edge(x, y));
        if (it != cs.edge_to_cycle.end() && it->second != i) continue;
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = x;
          q.push(y);
        }
      }
    }
    std::sort(dom.vertices.begin(), dom.vertices.end());
    std::sort(dom.boundary_vertices.begin(), dom.boundary_vertices.end());

    for (Vertex bv : dom.boundary_vertices) {
      std::vector<Vertex> path{bv};
      for (Vertex z = bv; !on_this[z]; z = parent[z]) path.push_back(parent[z]);
      std::reverse(path.begin(), path.end());
      for (std::size_t j : through[bv]) {
        if (j != i) dom.connectors.push_back(Connector{i, j, path});
      }
    }
    std::sort(dom.connectors.begin(), dom.connectors.end(),
              [](const Connector& a, const Connector& b) {
                return std::tie(a.to_cycle, a.path) < std::tie(b.to_cycle, b.path);
              });
    out.push_back(std::move(dom));
  }
  return out;
}

}  // namespace mdim

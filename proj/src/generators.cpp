#include "mdim/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

namespace mdim {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw GeneratorError("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kTree: return "tree";
    case Family::kUnicyclic: return "unicyclic";
    case Family::kCactus: return "cactus";
    case Family::kGeneral: return "general";
    case Family::kNamed: return "named";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::kTree, Family::kUnicyclic, Family::kCactus, Family::kGeneral,
                   Family::kNamed}) {
    if (name == to_string(f)) return f;
  }
  throw GeneratorError("unknown family: " + name);
}

namespace {

std::vector<Edge> prufer_tree(std::size_t n, SplitMix64& rng) {
  std::vector<Edge> edges;
  if (n <= 1) return edges;
  if (n == 2) return {Edge(0, 1)};
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex x : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

std::size_t param(const std::map<std::string, std::size_t>& params, const std::string& family,
                  const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw GeneratorError(family + " needs parameter '" + key + "'");
  return it->second;
}

void append_cycle(std::vector<Edge>& edges, Vertex first, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    edges.emplace_back(static_cast<Vertex>(first + k),
                       static_cast<Vertex>(first + (k + 1) % len));
  }
}

}  // namespace

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GeneratorError("tree needs n >= 1");
  SplitMix64 rng(seed);
  return Graph::build(n, prufer_tree(n, rng));
}

Graph random_unicyclic(std::size_t n, std::size_t cycle_len, std::uint64_t seed) {
  if (cycle_len < 3 || cycle_len > n) {
    throw GeneratorError("unicyclic needs 3 <= cycle_len <= n (got cycle_len=" +
                         std::to_string(cycle_len) + ", n=" + std::to_string(n) + ")");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  append_cycle(edges, 0, cycle_len);
  for (std::size_t v = cycle_len; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(rng.below(v)));
  }
  return Graph::build(n, edges);
}

Graph random_cactus(std::size_t n, std::size_t c, std::uint64_t seed,
                    std::pair<std::size_t, std::size_t> cycle_len_range) {
  if (c == 0) return random_tree(n, seed);
  auto [lo, hi] = cycle_len_range;
  if (lo < 3 || hi < lo) throw GeneratorError("cycle lengths must satisfy 3 <= min <= max");
  if (n < 2 * c + 1) {
    throw GeneratorError("cactus with " + std::to_string(c) + " cycles needs n >= " +
                         std::to_string(2 * c + 1));
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::size_t order = 1;
  std::size_t cycles_left = c;
  while (order < n) {
    const std::size_t rem = n - order;
    const bool can_pendant = rem - 1 >= 2 * cycles_left;
    const bool can_cycle = cycles_left > 0 && rem >= 2;
    const bool place_cycle = can_cycle && (!can_pendant || rng.below(2) == 0);
    const Vertex at = static_cast<Vertex>(rng.below(order));
    if (place_cycle) {
      // Leave at least two fresh vertices for every later cycle.
      const std::size_t longest = std::min(hi, rem - 2 * (cycles_left - 1) + 1);
      const std::size_t len = rng.between(std::min(lo, longest), longest);
      Vertex prev = at;
      for (std::size_t k = 1; k < len; ++k) {
        Vertex fresh = static_cast<Vertex>(order++);
        edges.emplace_back(prev, fresh);
        prev = fresh;
      }
      edges.emplace_back(prev, at);
      --cycles_left;
    } else {
      edges.emplace_back(at, static_cast<Vertex>(order++));
    }
  }
  return Graph::build(n, edges);
}

Graph random_general(std::size_t n, std::size_t c, std::uint64_t seed) {
  if (n == 0) throw GeneratorError("graph needs n >= 1");
  const std::size_t room = n * (n - 1) / 2 - (n - 1);
  if (c > room) {
    throw GeneratorError("cyclomatic number " + std::to_string(c) + " infeasible for n=" +
                         std::to_string(n));
  }
  SplitMix64 rng(seed);
  auto edges = prufer_tree(n, rng);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> missing;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!std::binary_search(sorted.begin(), sorted.end(), Edge(a, b))) missing.emplace_back(a, b);
    }
  }
  for (std::size_t k = 0; k < c; ++k) {
    std::size_t pick = k + rng.below(missing.size() - k);
    std::swap(missing[k], missing[pick]);
    edges.push_back(missing[k]);
  }
  return Graph::build(n, edges);
}

Graph named_family(const std::string& name, const std::map<std::string, std::size_t>& params) {
  std::vector<Edge> edges;
  if (name == "path") {
    std::size_t n = param(params, name, "n");
    if (n == 0) throw GeneratorError("path needs n >= 1");
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::build(n, edges);
  }
  if (name == "cycle") {
    std::size_t g = param(params, name, "g");
    if (g < 3) throw GeneratorError("cycle needs g >= 3");
    append_cycle(edges, 0, g);
    return Graph::build(g, edges);
  }
  if (name == "star") {
    std::size_t leaves = param(params, name, "leaves");
    if (leaves == 0) throw GeneratorError("star needs leaves >= 1");
    for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::build(leaves + 1, edges);
  }
  if (name == "spider") {
    std::size_t legs = param(params, name, "legs");
    std::size_t len = param(params, name, "len");
    if (legs == 0 || len == 0) throw GeneratorError("spider needs legs >= 1 and len >= 1");
    Vertex next = 1;
    for (std::size_t leg = 0; leg < legs; ++leg) {
      Vertex prev = 0;
      for (std::size_t k = 0; k < len; ++k) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
    }
    return Graph::build(next, edges);
  }
  if (name == "tadpole") {
    std::size_t g = param(params, name, "g");
    std::size_t tail = param(params, name, "tail");
    if (g < 3) throw GeneratorError("tadpole needs g >= 3");
    append_cycle(edges, 0, g);
    Vertex prev = 0;
    for (std::size_t k = 0; k < tail; ++k) {
      Vertex v = static_cast<Vertex>(g + k);
      edges.emplace_back(prev, v);
      prev = v;
    }
    return Graph::build(g + tail, edges);
  }
  if (name == "bowtie") {
    return Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  }
  if (name == "theta-free-cactus-chain") {
    std::size_t count = param(params, name, "count");
    std::size_t g = param(params, name, "g");
    std::size_t gap = params.contains("gap") ? params.at("gap") : 0;
    if (count == 0 || g < 3) throw GeneratorError("cactus chain needs count >= 1 and g >= 3");
    // Cycle k occupies a contiguous id block; its vertex g/2 leads to the
    // next cycle through `gap` edges.
    Vertex next = 0;
    Vertex exit_vertex = 0;
    for (std::size_t k = 0; k < count; ++k) {
      Vertex entry;
      if (k == 0) {
        entry = next;
      } else if (gap == 0) {
        entry = exit_vertex;
      } else {
        Vertex prev = exit_vertex;
        for (std::size_t s = 0; s < gap; ++s) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        entry = prev;
      }
      std::vector<Vertex> ring{entry};
      if (k == 0) ++next;
      for (std::size_t s = 1; s < g; ++s) ring.push_back(next++);
      for (std::size_t s = 0; s < g; ++s) edges.emplace_back(ring[s], ring[(s + 1) % g]);
      exit_vertex = ring[g / 2];
    }
    return Graph::build(next, edges);
  }
  throw GeneratorError("unknown named family: " + name);
}

Graph generate(const GenConfig& cfg, std::uint64_t seed) {
  if (cfg.n_min == 0 || cfg.n_max < cfg.n_min) throw GeneratorError("need 1 <= n_min <= n_max");
  if (cfg.cycles_max < cfg.cycles_min) throw GeneratorError("need cycles_min <= cycles_max");
  SplitMix64 rng(seed);
  const std::size_t n = rng.between(cfg.n_min, cfg.n_max);
  const std::size_t c = rng.between(cfg.cycles_min, cfg.cycles_max);
  const std::uint64_t sub = rng.next();
  switch (cfg.family) {
    case Family::kTree:
      return random_tree(n, sub);
    case Family::kUnicyclic: {
      auto [lo, hi] = cfg.cycle_len_range;
      if (lo < 3 || hi < lo) throw GeneratorError("cycle lengths must satisfy 3 <= min <= max");
      if (lo > n) throw GeneratorError("cycle length exceeds n");
      const std::size_t len = rng.between(lo, std::min(hi, n));
      return random_unicyclic(n, len, sub);
    }
    case Family::kCactus:
      return random_cactus(n, c, sub, cfg.cycle_len_range);
    case Family::kGeneral:
      return random_general(n, c, sub);
    case Family::kNamed:
      return named_family(cfg.named, cfg.named_params);
  }
  throw GeneratorError("unknown family");
}

}  // namespace mdim

#include "mdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace mdim {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kHardOrderCap = 64;
constexpr std::uint64_t kChunk = 2048;

// For each pair of elements to be told apart, the set of vertices whose
// distance to them differs. S resolves everything iff it meets every mask.
std::vector<Mask> separator_masks(const Graph& g, Resolve what) {
  const auto& dm = g.distances();
  const std::size_t n = g.order();
  std::vector<Mask> masks;
  if (what == Resolve::kVertices) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        Mask m = 0;
        for (Vertex s = 0; s < n; ++s) {
          if (dm(a, s) != dm(b, s)) m |= Mask{1} << s;
        }
        masks.push_back(m);
      }
    }
  } else {
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        Mask m = 0;
        for (Vertex s = 0; s < n; ++s) {
          auto da = std::min(dm(edges[a].u, s), dm(edges[a].v, s));
          auto db = std::min(dm(edges[b].u, s), dm(edges[b].v, s));
          if (da != db) m |= Mask{1} << s;
        }
        masks.push_back(m);
      }
    }
  }
  // Pairs with few separators reject most candidates; test them first.
  std::sort(masks.begin(), masks.end(), [](Mask x, Mask y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

bool hits_all(std::span<const Mask> masks, Mask s) {
  for (Mask m : masks) {
    if ((m & s) == 0) return false;
  }
  return true;
}

// Binomial coefficients for n <= 64; C(64, 32) < 2^63 so nothing overflows.
std::uint64_t choose(std::size_t n, std::size_t k) {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kHardOrderCap + 1);
    for (std::size_t a = 0; a <= kHardOrderCap; ++a) {
      t[a].assign(a + 1, 1);
      for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  if (k > n) return 0;
  return table[n][k];
}

// The combination of rank `rank` among k-subsets of {0..n-1} in lex order.
std::vector<Vertex> unrank(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<Vertex> c;
  c.reserve(k);
  Vertex x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t with_x = choose(n - x - 1, k - i - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

// Advances to the next k-subset in lex order; false after the last one.
bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

Mask to_mask(std::span<const Vertex> c) {
  Mask m = 0;
  for (Vertex v : c) m |= Mask{1} << v;
  return m;
}

void check_order(const Graph& g, const SolverOptions& opts) {
  const std::size_t cap = std::min(opts.max_order, kHardOrderCap);
  if (g.order() > cap) {
    throw InstanceTooLarge("graph has " + std::to_string(g.order()) +
                           " vertices; exact search cap is " + std::to_string(cap));
  }
}

// Lowest-rank k-subset meeting every mask, searched in parallel chunks.
std::optional<std::uint64_t> first_hit(std::span<const Mask> masks, std::size_t n,
                                       std::size_t k, unsigned workers) {
  const std::uint64_t total = choose(n, k);
  constexpr std::uint64_t kNotFound = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNotFound};
  std::atomic<std::uint64_t> next_chunk{0};

  auto work = [&] {
    while (true) {
      const std::uint64_t start = next_chunk.fetch_add(kChunk);
      if (start >= total || start > best.load()) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      auto c = unrank(n, k, start);
      for (std::uint64_t r = start; r < stop; ++r) {
        if (hits_all(masks, to_mask(c))) {
          std::uint64_t cur = best.load();
          while (r < cur && !best.compare_exchange_weak(cur, r)) {
          }
          break;
        }
        if (!next_combination(c, n)) break;
      }
    }
  };

  const unsigned count =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), (total + kChunk - 1) / kChunk));
  if (count <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
  }
  if (best.load() == kNotFound) return std::nullopt;
  return best.load();
}

DimensionResult solve(const Graph& g, Resolve what, const SolverOptions& opts) {
  check_order(g, opts);
  const std::size_t n = g.order();
  const auto masks = separator_masks(g, what);
  const std::size_t limit = opts.max_subset_size.value_or(n == 1 ? 0 : n - 1);
  for (std::size_t k = 0; k <= std::min(limit, n); ++k) {
    if (auto rank = first_hit(masks, n, k, opts.workers)) {
      return DimensionResult{k, unrank(n, k, *rank)};
    }
  }
  throw InstanceTooLarge("no generator with at most " + std::to_string(limit) + " vertices");
}

}  // namespace

bool is_metric_generator(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> S) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> vecs(n);
  for (Vertex v = 0; v < n; ++v) {
    vecs[v].reserve(S.size());
    for (Vertex s : S) vecs[v].push_back(dm(v, s));
  }
  std::sort(vecs.begin(), vecs.end());
  return std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end();
}

bool is_edge_metric_generator(const Graph& g, const DistanceMatrix& dm,
                              std::span<const Vertex> S) {
  std::vector<std::vector<std::uint32_t>> vecs;
  vecs.reserve(g.size());
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> row;
    row.reserve(S.size());
    for (Vertex s : S) row.push_back(std::min(dm(e.u, s), dm(e.v, s)));
    vecs.push_back(std::move(row));
  }
  std::sort(vecs.begin(), vecs.end());
  return std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end();
}

GeneratorReport evaluate_generator(const Graph& g, VertexSet S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  GeneratorReport r;
  r.is_vertex_generator = is_metric_generator(g, g.distances(), S);
  r.is_edge_generator = is_edge_metric_generator(g, g.distances(), S);
  r.cardinality = S.size();
  r.S = std::move(S);
  return r;
}

DimensionResult metric_dimension(const Graph& g, const SolverOptions& opts) {
  return solve(g, Resolve::kVertices, opts);
}

DimensionResult edge_metric_dimension(const Graph& g, const SolverOptions& opts) {
  return solve(g, Resolve::kEdges, opts);
}

std::vector<VertexSet> all_generators_of_size(const Graph& g, Resolve what, std::size_t size,
                                              const SolverOptions& opts) {
  check_order(g, opts);
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  if (size > n) return out;
  const auto masks = separator_masks(g, what);
  std::vector<Vertex> c(size);
  for (std::size_t i = 0; i < size; ++i) c[i] = static_cast<Vertex>(i);
  do {
    if (hits_all(masks, to_mask(c))) out.push_back(c);
  } while (size > 0 && next_combination(c, n));
  return out;
}

}  // namespace mdim

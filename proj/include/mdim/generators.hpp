#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "mdim/graph.hpp"

namespace mdim {

/// SplitMix64 (Steele, Lea and Flood; reference code by S. Vigna). Seed
/// 1234567 yields 6457827717110365317, 3203168211198807973, ...
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { kTree, kUnicyclic, kCactus, kGeneral, kNamed };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

struct GenConfig {
  Family family = Family::kTree;
  /// Order drawn uniformly from [n_min, n_max] per sample.
  std::size_t n_min = 10;
  std::size_t n_max = 10;
  /// Cycle count (cactus) or cyclomatic number (general), drawn from the range.
  std::size_t cycles_min = 1;
  std::size_t cycles_max = 1;
  /// Cycle lengths for unicyclic/cactus samples.
  std::pair<std::size_t, std::size_t> cycle_len_range{3, 6};
  std::string named;
  std::map<std::string, std::size_t> named_params;
};

/// Prüfer-sequence decoding; uniform over labelled trees.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Cycle 0..cycle_len-1 with each further vertex attached to a uniformly
/// chosen earlier vertex.
Graph random_unicyclic(std::size_t n, std::size_t cycle_len, std::uint64_t seed);

/// Grows from a single vertex by attaching either a pendant vertex or a new
/// cycle at a uniformly chosen existing vertex. Needs n >= 2c + 1.
Graph random_cactus(std::size_t n, std::size_t c, std::uint64_t seed,
                    std::pair<std::size_t, std::size_t> cycle_len_range = {3, 6});

/// Random spanning tree plus `c` extra edges chosen uniformly among non-edges.
Graph random_general(std::size_t n, std::size_t c, std::uint64_t seed);

/// path(n), cycle(g), star(leaves), spider(legs, len), tadpole(g, tail),
/// bowtie(), theta-free-cactus-chain(count, g, gap).
Graph named_family(const std::string& name, const std::map<std::string, std::size_t>& params);

/// One sample from the configured family.
Graph generate(const GenConfig& cfg, std::uint64_t seed);

}  // namespace mdim

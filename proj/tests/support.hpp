#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho::testing {

// Test-side randomness, independent of the library generator.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  std::vector<double> lengths(std::size_t count, double lo, double hi) {
    std::vector<double> out(count);
    for (double& x : out) x = uniform(lo, hi);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

// Connected graph with min degree >= 2 and Betti number >= 2: a cycle through
// every vertex plus extra random edges (loops and multi-edges allowed).
inline GraphSpec random_core_spec(Rand& rng, std::size_t vertices, std::size_t extra,
                                  double lo = 0.2, double hi = 3.0) {
  GraphSpec spec{vertices, {}};
  for (std::size_t v = 0; v < vertices; ++v) {
    spec.edges.push_back({v, (v + 1) % vertices, rng.uniform(lo, hi)});
  }
  for (std::size_t e = 0; e < extra; ++e) {
    spec.edges.push_back({rng.index(0, vertices - 1), rng.index(0, vertices - 1), rng.uniform(lo, hi)});
  }
  return spec;
}

// Hangs a random tree of `leaves` extra vertices off the graph.
inline GraphSpec with_pendant_trees(GraphSpec spec, Rand& rng, std::size_t extra_vertices) {
  for (std::size_t i = 0; i < extra_vertices; ++i) {
    const std::size_t attach = rng.index(0, spec.vertex_count - 1);
    spec.edges.push_back({attach, spec.vertex_count, rng.uniform(0.1, 2.0)});
    ++spec.vertex_count;
  }
  return spec;
}

}  // namespace ortho::testing

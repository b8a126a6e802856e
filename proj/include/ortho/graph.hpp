#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ortho/error.hpp"

namespace ortho {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double length = 0.0;
};

struct GraphSpec {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

// One orientation of an edge. Dart 2e runs u -> v of edge e, dart 2e+1 runs v -> u.
struct Dart {
  std::size_t tail = 0;
  std::size_t head = 0;
  double length = 0.0;
  std::size_t reverse = 0;
  std::size_t edge = 0;
};

inline void validate(const GraphSpec& spec) {
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const Edge& edge = spec.edges[e];
    if (edge.u >= spec.vertex_count || edge.v >= spec.vertex_count) {
      throw InvalidSpec("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (!std::isfinite(edge.length) || !(edge.length > 0.0)) {
      throw InvalidSpec("edge " + std::to_string(e) + " must have a finite positive length");
    }
  }
}

/// Immutable metric graph with its dart structure.
///
/// Darts are ordered by (edge index, orientation), so dart indices depend only
/// on the edge order of the spec. Loops yield two distinct darts with equal
/// tail and head.
class MetricGraph {
 public:
  MetricGraph() = default;

  explicit MetricGraph(GraphSpec spec) : spec_(std::move(spec)) {
    validate(spec_);
    darts_.reserve(2 * spec_.edges.size());
    out_darts_.assign(spec_.vertex_count, {});
    for (std::size_t e = 0; e < spec_.edges.size(); ++e) {
      const Edge& edge = spec_.edges[e];
      const std::size_t d = darts_.size();
      darts_.push_back({edge.u, edge.v, edge.length, d + 1, e});
      darts_.push_back({edge.v, edge.u, edge.length, d, e});
      out_darts_[edge.u].push_back(d);
      out_darts_[edge.v].push_back(d + 1);
    }
  }

  const GraphSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return spec_.vertex_count; }
  std::size_t edge_count() const { return spec_.edges.size(); }
  std::size_t dart_count() const { return darts_.size(); }
  bool empty() const { return spec_.vertex_count == 0; }

  const std::vector<Dart>& darts() const { return darts_; }
  const Dart& dart(std::size_t d) const { return darts_[d]; }
  const std::vector<std::size_t>& out_darts(std::size_t v) const { return out_darts_[v]; }

  // A loop counts twice.
  std::size_t degree(std::size_t v) const { return out_darts_[v].size(); }

  double total_length() const {
    double sum = 0.0;
    for (const Edge& e : spec_.edges) sum += e.length;
    return sum;
  }

  // Number of connected components; isolated vertices count.
  std::size_t component_count() const {
    std::vector<std::size_t> parent(spec_.vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    std::size_t components = spec_.vertex_count;
    for (const Edge& e : spec_.edges) {
      const std::size_t a = find(e.u);
      const std::size_t b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components;
  }

 private:
  GraphSpec spec_;
  std::vector<Dart> darts_;
  std::vector<std::vector<std::size_t>> out_darts_;
};

inline MetricGraph build_graph(GraphSpec spec) { return MetricGraph(std::move(spec)); }

// First Betti number E - V + #components.
inline std::size_t betti(const MetricGraph& g) {
  return g.edge_count() + g.component_count() - g.vertex_count();
}

struct PruneResult {
  MetricGraph graph;
  // Indices in the input graph, ascending.
  std::vector<std::size_t> removed_vertices;
  // kept_vertices[i] is the input index of vertex i of the result.
  std::vector<std::size_t> kept_vertices;
};

/// Repeatedly deletes vertices of degree at most one together with their
/// edge. Surviving vertices and edges keep their relative order.
inline PruneResult prune_leaves_report(const MetricGraph& g) {
  const GraphSpec& spec = g.spec();
  const std::size_t nv = spec.vertex_count;
  std::vector<std::size_t> degree(nv, 0);
  for (const Edge& e : spec.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    incident[spec.edges[e].u].push_back(e);
    if (spec.edges[e].v != spec.edges[e].u) incident[spec.edges[e].v].push_back(e);
  }

  std::vector<bool> vertex_alive(nv, true);
  std::vector<bool> edge_alive(spec.edges.size(), true);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < nv; ++v) {
    if (degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    if (!vertex_alive[v]) continue;
    vertex_alive[v] = false;
    for (std::size_t e : incident[v]) {
      if (!edge_alive[e]) continue;
      // Degree <= 1 means this is a non-loop edge.
      edge_alive[e] = false;
      const std::size_t other = spec.edges[e].u == v ? spec.edges[e].v : spec.edges[e].u;
      if (--degree[other] <= 1 && vertex_alive[other]) queue.push_back(other);
    }
  }

  PruneResult result;
  std::vector<std::size_t> remap(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (vertex_alive[v]) {
      remap[v] = result.kept_vertices.size();
      result.kept_vertices.push_back(v);
    } else {
      result.removed_vertices.push_back(v);
    }
  }
  GraphSpec core;
  core.vertex_count = result.kept_vertices.size();
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    core.edges.push_back({remap[spec.edges[e].u], remap[spec.edges[e].v], spec.edges[e].length});
  }
  result.graph = MetricGraph(std::move(core));
  return result;
}

inline MetricGraph prune_leaves(const MetricGraph& g) { return prune_leaves_report(g).graph; }

inline bool has_leaves(const MetricGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 1) return true;
  }
  return false;
}

// Small named graphs used throughout the tests and the CLI samples.
namespace shapes {

inline MetricGraph bouquet(const std::vector<double>& lengths) {
  GraphSpec spec{1, {}};
  for (double l : lengths) spec.edges.push_back({0, 0, l});
  return MetricGraph(std::move(spec));
}

inline MetricGraph two_vertex(const std::vector<double>& lengths) {
  GraphSpec spec{2, {}};
  for (double l : lengths) spec.edges.push_back({0, 1, l});
  return MetricGraph(std::move(spec));
}

inline MetricGraph circle(double length) { return bouquet({length}); }

}  // namespace shapes

}  // namespace ortho

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ortho/error.hpp"
#include "ortho/graph.hpp"
#include "ortho/transfer.hpp"

namespace ortho {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct EntropyOptions {
  double tol_h = 1e-12;
  double tol_rho = 1e-13;
  bool auto_prune = true;
  std::size_t max_iterations = 1'000'000;
};

struct EntropyResult {
  double h = 0.0;
  double residual = 0.0;
  // Indexed by the darts of `core`; empty when h = 0.
  std::vector<double> perron_vector;
  // Absent when the entropy vanishes and no bisection ran.
  std::optional<Bracket> bracket;
  // The leaf-free graph the system was solved on, and what pruning removed.
  MetricGraph core;
  std::vector<std::size_t> pruned_vertices;
  std::size_t bisection_steps = 0;
};

// max_d |x_d - (M(h) x)_d|
inline double lim_residual(const MetricGraph& g, double h, const std::vector<double>& x) {
  const TransferMatrix m = transfer_matrix(g, h);
  std::vector<double> mx(x.size());
  m.apply(x, mx);
  double r = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) r = std::max(r, std::abs(x[d] - mx[d]));
  return r;
}

/// Volume entropy as the unique h > 0 with rho(M(h)) = 1.
///
/// Bisects on rho(M(h)) - 1. Each step only needs the side of 1 that rho lies
/// on, so power iteration stops once its Collatz-Wielandt bracket excludes 1,
/// warm-started from the previous Perron vector.
inline EntropyResult volume_entropy(const MetricGraph& g, const EntropyOptions& options = {}) {
  EntropyResult result;
  if (options.auto_prune) {
    PruneResult pruned = prune_leaves_report(g);
    result.core = std::move(pruned.graph);
    result.pruned_vertices = std::move(pruned.removed_vertices);
  } else {
    if (has_leaves(g)) throw NotPruned("graph has vertices of degree < 2 and pruning is disabled");
    result.core = g;
  }
  const MetricGraph& core = result.core;
  if (core.empty()) return result;
  if (core.component_count() > 1) {
    throw InvalidSpec("volume entropy needs a connected graph; the leaf-free core has " +
                      std::to_string(core.component_count()) + " components");
  }
  if (betti(core) <= 1) return result;

  PerronOptions decide;
  decide.tolerance = options.tol_rho;
  decide.max_iterations = options.max_iterations;
  decide.separate_from = 1.0;
  std::vector<double> warm;
  auto above_one = [&](double h) {
    PerronEstimate est = perron(transfer_matrix(core, h), decide, std::move(warm));
    warm = std::move(est.vector);
    if (est.lower > 1.0) return true;
    if (est.upper < 1.0) return false;
    return est.radius() >= 1.0;
  };

  if (!above_one(0.0)) throw NumericError("rho(M(0)) <= 1 on a core with Betti number >= 2");
  double lo = 0.0;
  double hi = 1.0;
  while (above_one(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NoConvergence("could not bracket the entropy from above");
  }
  while (hi - lo > options.tol_h) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (above_one(mid) ? lo : hi) = mid;
    ++result.bisection_steps;
  }
  result.h = 0.5 * (lo + hi);
  result.bracket = Bracket{lo, hi};

  PerronOptions full;
  full.tolerance = options.tol_rho;
  full.max_iterations = options.max_iterations;
  PerronEstimate est = perron(transfer_matrix(core, result.h), full, std::move(warm));
  result.perron_vector = std::move(est.vector);
  result.residual = lim_residual(core, result.h, result.perron_vector);
  return result;
}

/// Positive solution of x = M(h) x, normalized to max entry 1.
///
/// Throws NotAtEntropy when rho(M(h)) differs from 1 by more than
/// `tolerance`, i.e. when h is not the entropy of g.
inline std::vector<double> positive_solution(const MetricGraph& g, double h,
                                             double tolerance = 1e-9) {
  if (has_leaves(g)) throw NotPruned("positive_solution needs a leaf-free graph");
  const PerronEstimate est = perron(transfer_matrix(g, h));
  if (std::abs(est.radius() - 1.0) > tolerance) {
    throw NotAtEntropy("rho(M(h)) = " + std::to_string(est.radius()) + " at h = " +
                       std::to_string(h));
  }
  return est.vector;
}

}  // namespace ortho

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ortho/chord_diagram.hpp"
#include "ortho/error.hpp"
#include "ortho/transfer.hpp"

namespace ortho {

// 1 / (1 + e^x), without overflow for large x.
inline double logistic_tail(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

// sum_l 1 / (1 + e^{h l})
inline double orthosum(std::span<const double> lengths, double h) {
  double s = 0.0;
  for (double l : lengths) s += logistic_tail(h * l);
  return s;
}

namespace detail {

// Root of a strictly decreasing f with f(0+) > 0 > f(inf), on [1e-12, upper]
// with the upper end doubled until f changes sign.
template <typename F>
double bisect_decreasing(F&& f, double tol = 1e-13) {
  double lo = 1e-12;
  double hi = 1.0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NoConvergence("closed form root not bracketed");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline void require_positive(std::span<const double> lengths) {
  for (double l : lengths) {
    if (!std::isfinite(l) || !(l > 0.0)) throw InvalidSpec("lengths must be finite and positive");
  }
}

}  // namespace detail

/// Entropy of a wedge of circles: the h > 0 with sum 1/(1+e^{h l}) = 1/2.
inline double bouquet_entropy(std::span<const double> lengths) {
  if (lengths.size() < 2) throw TooFewCircles("a bouquet needs at least two circles");
  detail::require_positive(lengths);
  return detail::bisect_decreasing([&](double h) { return orthosum(lengths, h) - 0.5; });
}

/// Entropy of a graph with two vertices joined by parallel edges: the h > 0
/// with sum 1/(1+e^{h l}) = 1.
inline double two_vertex_entropy(std::span<const double> lengths) {
  if (lengths.size() < 3) throw TooFewEdges("a two-vertex graph needs at least three edges");
  detail::require_positive(lengths);
  return detail::bisect_decreasing([&](double h) { return orthosum(lengths, h) - 1.0; });
}

// tanh(hL/2) - 2 sum 1/(1+e^{h l_i}) for a bouquet of a circle of length L and
// loops of lengths `loops`. Vanishes at the bouquet's entropy.
inline double bouquet_tanh_residual(double circle, std::span<const double> loops, double h) {
  return std::tanh(h * circle / 2.0) - 2.0 * orthosum(loops, h);
}

// tanh(hL/4) - sum 1/(1+e^{h l_i}) for a circle of length L with two antipodal
// points joined by edges of lengths `chords`. Vanishes at the entropy.
inline double two_vertex_tanh_residual(double circle, std::span<const double> chords, double h) {
  return std::tanh(h * circle / 4.0) - orthosum(chords, h);
}

/// Forward distance along the circle from point q to point p: the sum of
/// arcs q+1, ..., p (cyclic), zero when p == q.
inline double forward_distance(const ChordDiagram& cd, std::size_t q, std::size_t p) {
  const std::size_t m = cd.points();
  double sum = 0.0;
  for (std::size_t j = (q + 1) % m, steps = (p + m - q) % m; steps > 0; j = (j + 1) % m, --steps) {
    sum += cd.arcs[j];
  }
  return sum;
}

/// Chord-variable system obtained by eliminating the circle darts.
///
/// With Y_p the variable of the chord dart leaving point p, the full system
/// reduces to Y_{omega(k)} = sum_i matrix(omega(k), i) Y_i. Indices are
/// points (0-based).
struct ReducedSystem {
  double h = 0.0;
  std::size_t size = 0;
  std::vector<double> matrix;      // exponential form, row-major
  std::vector<double> cosh_matrix; // hyperbolic form, row-major

  double operator()(std::size_t row, std::size_t col) const { return matrix[row * size + col]; }

  // max relative difference between the two forms
  double form_discrepancy() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      const double scale = std::max(std::abs(matrix[i]), std::abs(cosh_matrix[i]));
      if (scale > 0.0) worst = std::max(worst, std::abs(matrix[i] - cosh_matrix[i]) / scale);
    }
    return worst;
  }
};

namespace detail {

// alpha_{i,k} = e^{-h(sum_{j=k}^{i} L_j - L_k)} = e^{-h D(k, i)}
inline double alpha(const ChordDiagram& cd, double h, std::size_t i, std::size_t k) {
  return std::exp(-h * forward_distance(cd, k, i));
}

// beta_{i,k} = e^{-h(sum_{j=i+1}^{k} L_j - L_k)} = e^{-h D(i, k-1)}. At i = k this
// is e^{-h(L - L_k)}: the backward walk from point k-1 once around to point k.
inline double beta(const ChordDiagram& cd, double h, std::size_t i, std::size_t k) {
  const std::size_t m = cd.points();
  return std::exp(-h * forward_distance(cd, i, (k + m - 1) % m));
}

}  // namespace detail

inline ReducedSystem reduced_chord_system(const ChordDiagram& cd, double h) {
  validate(cd);
  for (double a : cd.arcs) {
    if (!(a > 0.0)) throw DegenerateArc("reduced system needs positive arcs");
  }
  if (!(h > 0.0)) throw InvalidSpec("reduced system needs h > 0");
  const std::size_t m = cd.points();
  const double total = cd.circle_length();
  const std::vector<std::size_t> omega = cd.partner();
  const std::vector<std::size_t> chord = cd.chord_at();
  const double wrap = 1.0 - std::exp(-h * total);
  const double half_sinh = std::sinh(h * total / 2.0);

  ReducedSystem sys;
  sys.h = h;
  sys.size = m;
  sys.matrix.assign(m * m, 0.0);
  sys.cosh_matrix.assign(m * m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t row = omega[k];
    const std::size_t next = (k + 1) % m;
    for (std::size_t i = 0; i < m; ++i) {
      const double weight = std::exp(-h * cd.chords[chord[i]]);
      double exp_form;
      double cosh_form;
      if (i == k) {
        exp_form = 2.0 * std::exp(-h * total) / wrap;
        cosh_form = std::exp(-h * total / 2.0) / half_sinh;
      } else {
        exp_form = (std::exp(-h * cd.arcs[next]) * detail::alpha(cd, h, i, next) +
                    std::exp(-h * cd.arcs[k]) * detail::beta(cd, h, i, k)) /
                   wrap;
        cosh_form = std::cosh(h * (forward_distance(cd, k, i) - total / 2.0)) / half_sinh;
      }
      sys.matrix[row * m + i] = weight * exp_form;
      sys.cosh_matrix[row * m + i] = weight * cosh_form;
    }
  }
  return sys;
}

inline PerronEstimate reduced_perron(const ReducedSystem& sys, const PerronOptions& options = {}) {
  const std::size_t m = sys.size;
  double min_row = std::numeric_limits<double>::infinity();
  double max_row = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m; ++c) s += sys(r, c);
    min_row = std::min(min_row, s);
    max_row = std::max(max_row, s);
  }
  return detail::perron_iterate(
      m, min_row, max_row,
      [&sys, m](std::span<const double> x, std::span<double> y) {
        for (std::size_t r = 0; r < m; ++r) {
          double s = 0.0;
          for (std::size_t c = 0; c < m; ++c) s += sys(r, c) * x[c];
          y[r] = s;
        }
      },
      {}, options, m <= detail::kSquaringMaxOrder ? &sys.matrix : nullptr);
}

/// Rebuilds the full dart vector of realize_graph(cd) from chord variables Y
/// by the cyclic substitution formulas for X (forward arc darts) and X-bar
/// (backward arc darts). Chord darts take Y directly.
inline std::vector<double> expand_reduced_solution(const ChordDiagram& cd, double h,
                                                   std::span<const double> y) {
  const std::size_t m = cd.points();
  const double wrap = 1.0 - std::exp(-h * cd.circle_length());
  const std::vector<std::size_t> chord = cd.chord_at();
  std::vector<double> w(m);
  for (std::size_t p = 0; p < m; ++p) w[p] = std::exp(-h * cd.chords[chord[p]]) / wrap;

  std::vector<double> x(2 * (m + cd.n), 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    double forward = 0.0;
    double backward = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      forward += detail::alpha(cd, h, p, a) * w[p] * y[p];
      backward += detail::beta(cd, h, p, a) * w[p] * y[p];
    }
    x[2 * a] = forward;
    x[2 * a + 1] = backward;
  }
  for (std::size_t k = 0; k < cd.n; ++k) {
    x[2 * (m + k)] = y[cd.matching[k].first];
    x[2 * (m + k) + 1] = y[cd.matching[k].second];
  }
  return x;
}

/// Per-chord variables Z = (1 + e^{-h l})(Y_p + Y_{omega(p)}) and the two
/// linear bounds they satisfy at the entropy:
///   (2/sinh(hL/2)) S <= Z_k <= (2/tanh(hL/2)) S,  S = sum_i Z_i / (1 + e^{h l_i}).
struct ZChain {
  std::vector<double> z;
  double weighted_sum = 0.0;
  double upper_bound = 0.0;
  double lower_bound = 0.0;

  bool holds(double rel_tol = 1e-12) const {
    for (double v : z) {
      if (v > upper_bound * (1.0 + rel_tol) || v < lower_bound * (1.0 - rel_tol)) return false;
    }
    return true;
  }
};

inline ZChain z_chain(const ChordDiagram& cd, double h, std::span<const double> y) {
  ZChain chain;
  const double total = cd.circle_length();
  for (std::size_t k = 0; k < cd.n; ++k) {
    const auto [p, q] = cd.matching[k];
    const double z = (1.0 + std::exp(-h * cd.chords[k])) * (y[p] + y[q]);
    chain.z.push_back(z);
    chain.weighted_sum += z * logistic_tail(h * cd.chords[k]);
  }
  chain.upper_bound = 2.0 / std::tanh(h * total / 2.0) * chain.weighted_sum;
  chain.lower_bound = 2.0 / std::sinh(h * total / 2.0) * chain.weighted_sum;
  return chain;
}

}  // namespace ortho

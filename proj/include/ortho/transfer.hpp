#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ortho/error.hpp"
#include "ortho/graph.hpp"

namespace ortho {

struct TransferEntry {
  std::size_t column = 0;
  double weight = 0.0;
};

/// Non-backtracking transfer operator at parameter h.
///
/// Row d holds e^{-h length(d')} for every successor d' of d, i.e. every dart
/// leaving head(d) other than reverse(d). Stored by rows since each row has
/// deg(head) - 1 entries.
class TransferMatrix {
 public:
  TransferMatrix() = default;

  TransferMatrix(std::size_t size, double h) : h_(h), rows_(size) {}

  double h() const { return h_; }
  std::size_t size() const { return rows_.size(); }

  const std::vector<TransferEntry>& row(std::size_t d) const { return rows_[d]; }
  std::vector<TransferEntry>& row(std::size_t d) { return rows_[d]; }

  double at(std::size_t d, std::size_t d2) const {
    double sum = 0.0;
    for (const TransferEntry& e : rows_[d]) {
      if (e.column == d2) sum += e.weight;
    }
    return sum;
  }

  double row_sum(std::size_t d) const {
    double sum = 0.0;
    for (const TransferEntry& e : rows_[d]) sum += e.weight;
    return sum;
  }

  // out = M x
  void apply(std::span<const double> x, std::span<double> out) const {
    for (std::size_t d = 0; d < rows_.size(); ++d) {
      double sum = 0.0;
      for (const TransferEntry& e : rows_[d]) sum += e.weight * x[e.column];
      out[d] = sum;
    }
  }

  std::vector<double> dense() const {
    const std::size_t n = size();
    std::vector<double> m(n * n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
      for (const TransferEntry& e : rows_[d]) m[d * n + e.column] += e.weight;
    }
    return m;
  }

 private:
  double h_ = 0.0;
  std::vector<std::vector<TransferEntry>> rows_;
};

inline TransferMatrix transfer_matrix(const MetricGraph& g, double h) {
  TransferMatrix m(g.dart_count(), h);
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    const Dart& dart = g.dart(d);
    for (std::size_t next : g.out_darts(dart.head)) {
      if (next == dart.reverse) continue;
      m.row(d).push_back({next, std::exp(-h * g.dart(next).length)});
    }
  }
  return m;
}

struct PerronOptions {
  double tolerance = 1e-13;  // relative width of the final bracket on rho
  std::size_t max_iterations = 1'000'000;
  // When set, iteration may stop as soon as the bracket excludes this value.
  std::optional<double> separate_from;
};

struct PerronEstimate {
  double lower = 0.0;  // Collatz-Wielandt bounds on rho(M)
  double upper = 0.0;
  std::vector<double> vector;  // positive, max entry 1
  std::size_t iterations = 0;

  double radius() const { return 0.5 * (lower + upper); }
};

namespace detail {

// Dense matrices up to this order get a squaring restart when power iteration stalls.
inline constexpr std::size_t kSquaringMaxOrder = 256;
inline constexpr std::size_t kSquaringAfter = 2000;

// Approximate Perron vector of the n x n row-major matrix a + shift I, from
// repeated squaring: (A + sI)^{2^k} tends to a rank-one matrix whose columns
// are multiples of the Perron vector. Handles tiny spectral gaps in about
// log2(1 / gap) products.
inline std::vector<double> squaring_start(std::vector<double> a, std::size_t n, double shift) {
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] += shift;
  std::vector<double> b(n * n);
  std::vector<double> v(n, 1.0);
  for (int k = 0; k < 64; ++k) {
    std::fill(b.begin(), b.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const double ail = a[i * n + l];
        if (ail == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) b[i * n + j] += ail * a[l * n + j];
      }
    }
    const double peak = *std::max_element(b.begin(), b.end());
    for (double& x : b) x /= peak;
    a.swap(b);

    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) next[i] += a[i * n + j];
    }
    const double top = *std::max_element(next.begin(), next.end());
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= top;
      change = std::max(change, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    if (change <= 4 * std::numeric_limits<double>::epsilon()) break;
  }
  return v;
}

template <typename Apply>
PerronEstimate perron_iterate(std::size_t n, double min_row, double max_row, Apply&& apply,
                              std::vector<double> start, const PerronOptions& options,
                              const std::vector<double>* dense = nullptr) {
  PerronEstimate est;
  if (n == 0 || max_row == 0.0) {
    est.vector.assign(n, 1.0);
    return est;
  }
  // Iterate on M + sI. The shift removes the peripheral eigenvalues that make
  // plain power iteration oscillate on periodic non-backtracking systems.
  const double shift = min_row > 0.0 ? std::sqrt(min_row * max_row) : 0.5 * max_row;
  std::vector<double> x = std::move(start);
  if (x.size() != n) x.assign(n, 1.0);
  std::vector<double> y(n);

  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    apply(std::span<const double>(x), std::span<double>(y));
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      if (x[i] > 0.0) {
        const double r = y[i] / x[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      peak = std::max(peak, y[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / peak;
    est.lower = std::max(lo - shift, 0.0);
    est.upper = std::max(hi - shift, 0.0);
    est.iterations = it;
    const double width = hi - lo;
    if (width <= options.tolerance * est.lower || width == 0.0) break;
    if (options.separate_from &&
        (est.lower > *options.separate_from || est.upper < *options.separate_from)) {
      break;
    }
    if (dense != nullptr && it == kSquaringAfter) {
      x = squaring_start(*dense, n, shift);
      continue;
    }
    if (it == options.max_iterations) {
      throw NoConvergence("power iteration did not converge in " + std::to_string(it) +
                          " iterations");
    }
  }
  est.vector = std::move(x);
  return est;
}

}  // namespace detail

inline PerronEstimate perron(const TransferMatrix& m, const PerronOptions& options = {},
                             std::vector<double> start = {}) {
  double min_row = std::numeric_limits<double>::infinity();
  double max_row = 0.0;
  for (std::size_t d = 0; d < m.size(); ++d) {
    const double s = m.row_sum(d);
    min_row = std::min(min_row, s);
    max_row = std::max(max_row, s);
  }
  std::vector<double> dense;
  if (m.size() <= detail::kSquaringMaxOrder) dense = m.dense();
  return detail::perron_iterate(
      m.size(), min_row, max_row,
      [&m](std::span<const double> x, std::span<double> y) { m.apply(x, y); }, std::move(start),
      options, dense.empty() ? nullptr : &dense);
}

/// Perron root by shifted power iteration from the all-ones vector.
inline double spectral_radius(const TransferMatrix& m, double tol = 1e-13,
                              std::size_t max_iterations = 1'000'000) {
  PerronOptions options;
  options.tolerance = tol;
  options.max_iterations = max_iterations;
  return perron(m, options).radius();
}

}  // namespace ortho

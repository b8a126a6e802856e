#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ortho/error.hpp"
#include "ortho/graph.hpp"

namespace ortho {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct BallGrowth {
  std::vector<double> radii;
  std::vector<double> volumes;           // length of B(x, R) in the covering tree
  std::vector<std::uint64_t> counts;     // lifts of the base vertex within distance R
  std::uint64_t nodes = 0;               // tree edges visited
};

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

/// Metric balls around a lift of `base` in the universal covering tree,
/// for every radius in `radii` at once.
///
/// Tree edges are enumerated as non-backtracking dart sequences leaving
/// `base`; only the current path is held, never the tree. A lift of `base`
/// is a tree vertex whose path ends at `base`, so counts[r] is the number of
/// reduced loops of length <= radii[r] plus the trivial one.
inline BallGrowth ball_growth(const MetricGraph& g, std::size_t base, std::vector<double> radii,
                              std::uint64_t node_cap = kDefaultNodeCap) {
  if (base >= g.vertex_count()) throw InvalidSpec("base vertex out of range");
  for (double r : radii) {
    if (!(r > 0.0)) throw InvalidSpec("radii must be positive");
  }
  std::sort(radii.begin(), radii.end());
  BallGrowth out;
  out.radii = radii;
  out.counts.assign(radii.size(), 1);
  if (radii.empty()) return out;
  const double reach = radii.back();
  std::vector<CompensatedSum> volume(radii.size());

  struct Frame {
    std::size_t dart;
    double start;
  };
  std::vector<Frame> stack;
  for (std::size_t d : g.out_darts(base)) stack.push_back({d, 0.0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (++out.nodes > node_cap) {
      throw BudgetExceeded("ball enumeration exceeded " + std::to_string(node_cap) + " tree edges");
    }
    const Dart& dart = g.dart(f.dart);
    const double end = f.start + dart.length;
    for (std::size_t r = radii.size(); r-- > 0;) {
      if (f.start >= radii[r]) break;
      volume[r].add(std::min(dart.length, radii[r] - f.start));
      if (end <= radii[r] && dart.head == base) ++out.counts[r];
    }
    if (end < reach) {
      for (std::size_t next : g.out_darts(dart.head)) {
        if (next != dart.reverse) stack.push_back({next, end});
      }
    }
  }
  for (const CompensatedSum& v : volume) out.volumes.push_back(v.value());
  return out;
}

inline double ball_volume(const MetricGraph& g, std::size_t base, double radius,
                          std::uint64_t node_cap = kDefaultNodeCap) {
  return ball_growth(g, base, {radius}, node_cap).volumes.front();
}

inline std::uint64_t count_classes(const MetricGraph& g, std::size_t base, double radius,
                                   std::uint64_t node_cap = kDefaultNodeCap) {
  return ball_growth(g, base, {radius}, node_cap).counts.front();
}

struct EntropyEstimate {
  double value = 0.0;        // from ball volumes
  double from_counts = 0.0;  // from lifts of the base vertex
  double error_bar = 0.0;
  BallGrowth growth;
};

/// Growth-rate estimate (log V(R2) - log V(R1)) / (R2 - R1) of the ball
/// volume, with the same quotient for the class counts.
///
/// The error bar is the disagreement of the two quotients plus
/// 2 log(10) / (R2 - R1), the effect of a factor-10 drift in the constant of
/// exponential growth.
inline EntropyEstimate entropy_estimate(const MetricGraph& g, double r1, double r2,
                                        std::size_t base = 0,
                                        std::uint64_t node_cap = kDefaultNodeCap) {
  if (!(r1 > 0.0) || !(r2 > r1)) throw InvalidSpec("need 0 < R1 < R2");
  EntropyEstimate est;
  est.growth = ball_growth(g, base, {r1, r2}, node_cap);
  const double span = r2 - r1;
  const auto& v = est.growth.volumes;
  const auto& c = est.growth.counts;
  est.value = (std::log(v[1]) - std::log(v[0])) / span;
  est.from_counts =
      (std::log(static_cast<double>(c[1])) - std::log(static_cast<double>(c[0]))) / span;
  est.error_bar = std::abs(est.value - est.from_counts) + 2.0 / span * std::log(10.0);
  return est;
}

}  // namespace ortho

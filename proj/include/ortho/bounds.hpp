#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "ortho/chord_diagram.hpp"
#include "ortho/closed_forms.hpp"
#include "ortho/error.hpp"

namespace ortho {

/// Truncated orthospectrum: a finite multiset of positive lengths.
class Orthospectrum {
 public:
  Orthospectrum() = default;

  explicit Orthospectrum(std::vector<double> lengths) : lengths_(std::move(lengths)) {
    for (double l : lengths_) {
      if (!std::isfinite(l) || !(l > 0.0)) throw InvalidSpec("orthospectrum entries must be positive");
    }
  }

  std::span<const double> lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  bool empty() const { return lengths_.empty(); }

 private:
  std::vector<double> lengths_;
};

struct InequalityReport {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double slack_lower = 0.0;  // middle - lower
  double slack_upper = 0.0;  // upper - middle
  bool strict_lower = false;
  bool strict_upper = false;

  bool strict() const { return strict_lower && strict_upper; }
};

inline InequalityReport make_report(double lower, double middle, double upper) {
  InequalityReport r;
  r.lower = lower;
  r.middle = middle;
  r.upper = upper;
  r.slack_lower = middle - lower;
  r.slack_upper = upper - middle;
  r.strict_lower = lower < middle;
  r.strict_upper = middle < upper;
  return r;
}

/// tanh(hL/2) < 2 sum 1/(1+e^{h l_i}) < sinh(hL/2) for the chord graph of `cd`
/// at its entropy h. Violations are reported, not thrown.
inline InequalityReport graph_bounds(const ChordDiagram& cd, double h) {
  const double half = h * cd.circle_length() / 2.0;
  return make_report(std::tanh(half), 2.0 * orthosum(cd.chords, h), std::sinh(half));
}

enum class BoundVariant {
  theorem1,  // (2/h) asinh(sum 1/(1+e^{h l}))
  eq_basm,   // (2/h) asinh(2 sum 1/(1+e^{h l}))
};

inline double surface_lower_bound(const Orthospectrum& os, double h, BoundVariant variant) {
  if (os.empty()) throw EmptySpectrum("orthospectrum is empty");
  if (!(h > 0.0)) throw InvalidSpec("entropy must be positive");
  const double factor = variant == BoundVariant::eq_basm ? 2.0 : 1.0;
  return 2.0 / h * std::asinh(factor * orthosum(os.lengths(), h));
}

// Classical hyperbolic boundary length 2 sum log coth(l/2), truncated to `os`.
inline double hyperbolic_boundary_length(const Orthospectrum& os) {
  if (os.empty()) throw EmptySpectrum("orthospectrum is empty");
  double sum = 0.0;
  for (double l : os.lengths()) sum += std::log(1.0 / std::tanh(l / 2.0));
  return 2.0 * sum;
}

struct MonotoneBounds {
  std::pair<double, double> theorem1;
  std::pair<double, double> eq_basm;

  bool monotone() const {
    return theorem1.first >= theorem1.second && eq_basm.first >= eq_basm.second;
  }
};

/// Both surface bounds at h1 <= h2. Each bound is a product of two positive
/// decreasing functions of h, so the first of each pair dominates.
inline MonotoneBounds bound_monotone_in_h(const Orthospectrum& os, double h1, double h2) {
  if (!(h1 > 0.0) || h2 < h1) throw InvalidSpec("need 0 < h1 <= h2");
  return {{surface_lower_bound(os, h1, BoundVariant::theorem1),
           surface_lower_bound(os, h2, BoundVariant::theorem1)},
          {surface_lower_bound(os, h1, BoundVariant::eq_basm),
           surface_lower_bound(os, h2, BoundVariant::eq_basm)}};
}

}  // namespace ortho

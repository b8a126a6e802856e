#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ortho/error.hpp"
#include "ortho/rng.hpp"

namespace ortho {

/// Circle cut into N segments, with an entropy value h.
struct RemarkInstance {
  std::vector<double> segments;
  double h = 1.0;

  double total() const {
    double sum = 0.0;
    for (double s : segments) sum += s;
    return sum;
  }
};

inline void validate(const RemarkInstance& inst) {
  if (inst.segments.empty()) throw InvalidSpec("remark instance needs N >= 1 segments");
  for (double s : inst.segments) {
    if (!std::isfinite(s) || !(s > 0.0)) throw InvalidSpec("segment lengths must be positive");
  }
}

/// C(i) = #{k : D(k, i) < L/4 or D(k, i) > 3L/4}, D(k, i) the cyclic sum of
/// segments k+1..i (zero when k = i). Equivalent to
/// cosh(h(D - L/2)) > cosh(hL/4), so h plays no role.
inline std::vector<std::size_t> c_counts(const RemarkInstance& inst) {
  validate(inst);
  const std::size_t n = inst.segments.size();
  // prefix[i] = segments 0..i-1
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + inst.segments[i];
  const double total = prefix[n];
  const double quarter = total / 4.0;
  const double three_quarters = 3.0 * total / 4.0;

  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double d = k <= i ? prefix[i + 1] - prefix[k + 1]
                              : total - (prefix[k + 1] - prefix[i + 1]);
      if (d < quarter || d > three_quarters) ++counts[i];
    }
  }
  return counts;
}

struct RemarkVerdict {
  bool holds = false;
  std::size_t qualifying = 0;  // #{i : C(i) >= N/4}
  std::vector<std::size_t> counts;
};

// #{i : C(i) >= N/4} >= N/2, in integer arithmetic.
inline RemarkVerdict verify_claim(const RemarkInstance& inst) {
  RemarkVerdict v;
  v.counts = c_counts(inst);
  const std::size_t n = v.counts.size();
  for (std::size_t c : v.counts) {
    if (4 * c >= n) ++v.qualifying;
  }
  v.holds = 2 * v.qualifying >= n;
  return v;
}

// N uniform in [1, n_max], segments i.i.d. uniform in [lo, hi].
inline RemarkInstance random_remark_instance(std::size_t n_max, std::uint64_t seed, double lo = 0.05,
                                             double hi = 4.0) {
  if (n_max == 0) throw InvalidSpec("N must be positive");
  Xoshiro256 rng(seed);
  RemarkInstance inst;
  inst.segments.resize(1 + rng.below(n_max));
  for (double& s : inst.segments) s = rng.uniform(lo, hi);
  inst.h = rng.uniform(0.1, 10.0);
  return inst;
}

}  // namespace ortho

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ortho/error.hpp"
#include "ortho/graph.hpp"
#include "ortho/rng.hpp"

namespace ortho {

/// Circle with 2n marked points and n chords.
///
/// Indices are 0-based. Marked point p is the (p+1)-th vertex in the cyclic
/// order, and arcs[a] is the circle segment ending at point a, i.e. running
/// from point a-1 (cyclically) to point a. chords[k] is the length of the chord
/// joining matching[k].first and matching[k].second.
struct ChordDiagram {
  std::size_t n = 0;
  std::vector<double> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  std::vector<double> chords;

  std::size_t points() const { return 2 * n; }

  double circle_length() const {
    double sum = 0.0;
    for (double a : arcs) sum += a;
    return sum;
  }

  // partner[p] = omega(p)
  std::vector<std::size_t> partner() const {
    std::vector<std::size_t> w(points());
    for (const auto& [i, j] : matching) {
      w[i] = j;
      w[j] = i;
    }
    return w;
  }

  // chord_at[p] = index of the chord incident to point p
  std::vector<std::size_t> chord_at() const {
    std::vector<std::size_t> c(points());
    for (std::size_t k = 0; k < matching.size(); ++k) {
      c[matching[k].first] = k;
      c[matching[k].second] = k;
    }
    return c;
  }
};

inline void validate(const ChordDiagram& cd) {
  if (cd.n == 0) throw InvalidSpec("chord diagram needs n >= 1");
  if (cd.arcs.size() != 2 * cd.n) throw InvalidSpec("chord diagram needs 2n arc lengths");
  if (cd.matching.size() != cd.n || cd.chords.size() != cd.n) {
    throw InvalidSpec("chord diagram needs n chords and n matched pairs");
  }
  std::vector<bool> seen(2 * cd.n, false);
  for (const auto& [i, j] : cd.matching) {
    if (i >= 2 * cd.n || j >= 2 * cd.n || i == j || seen[i] || seen[j]) {
      throw InvalidSpec("matching is not a fixed-point-free involution on the 2n points");
    }
    seen[i] = seen[j] = true;
  }
  for (double a : cd.arcs) {
    if (!std::isfinite(a) || !(a > 0.0)) throw InvalidSpec("arc lengths must be finite and positive");
  }
  for (double c : cd.chords) {
    if (!std::isfinite(c) || !(c > 0.0)) throw InvalidSpec("chord lengths must be finite and positive");
  }
}

/// Vertices are the 2n points. Edges 0..2n-1 are the arcs, edge a oriented
/// from point a-1 to point a; edges 2n..3n-1 are the chords, oriented from
/// matching[k].first to matching[k].second.
inline MetricGraph realize_graph(const ChordDiagram& cd) {
  validate(cd);
  const std::size_t m = cd.points();
  GraphSpec spec{m, {}};
  spec.edges.reserve(3 * cd.n);
  for (std::size_t a = 0; a < m; ++a) spec.edges.push_back({(a + m - 1) % m, a, cd.arcs[a]});
  for (std::size_t k = 0; k < cd.n; ++k) {
    spec.edges.push_back({cd.matching[k].first, cd.matching[k].second, cd.chords[k]});
  }
  return MetricGraph(std::move(spec));
}

struct LengthRange {
  double lo = 0.05;
  double hi = 4.0;
};

// Sorts each pair and the pair list by first endpoint.
inline void normalize_matching(std::vector<std::pair<std::size_t, std::size_t>>& matching) {
  for (auto& p : matching) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(matching.begin(), matching.end());
}

/// Seeded chord diagram. The matching is uniform over the (2n-1)!! perfect
/// matchings: a Fisher-Yates shuffle of the points, paired consecutively.
/// Then 2n arc lengths and n chord lengths, i.i.d. uniform.
inline ChordDiagram random_chord_diagram(std::size_t n, std::uint64_t seed,
                                         LengthRange arc_range = {}, LengthRange chord_range = {}) {
  if (n == 0) throw InvalidSpec("chord diagram needs n >= 1");
  if (!(arc_range.lo > 0.0 && arc_range.hi >= arc_range.lo && chord_range.lo > 0.0 &&
        chord_range.hi >= chord_range.lo)) {
    throw InvalidSpec("length ranges must be positive intervals");
  }
  Xoshiro256 rng(seed);
  const std::size_t m = 2 * n;
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  for (std::size_t i = m - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  ChordDiagram cd;
  cd.n = n;
  for (std::size_t k = 0; k < n; ++k) cd.matching.emplace_back(order[2 * k], order[2 * k + 1]);
  normalize_matching(cd.matching);
  cd.arcs.resize(m);
  for (double& a : cd.arcs) a = rng.uniform(arc_range.lo, arc_range.hi);
  cd.chords.resize(n);
  for (double& c : cd.chords) c = rng.uniform(chord_range.lo, chord_range.hi);
  return cd;
}

/// Adds one chord whose endpoints split arcs `first_arc` and `second_arc` at
/// seeded uniform fractions (two distinct points when both are the same arc).
///
/// The new points are inserted into the cyclic order, so old points are
/// renumbered; the old chords keep their lengths and relative order and the
/// new chord is appended last. Total circle length is preserved, and the old
/// realized graph is the new one minus the new chord, up to the two
/// subdivision vertices.
inline ChordDiagram extend_diagram(const ChordDiagram& cd, double new_chord_length,
                                   std::size_t first_arc, std::size_t second_arc,
                                   std::uint64_t seed) {
  validate(cd);
  const std::size_t m = cd.points();
  if (first_arc >= m || second_arc >= m) throw InvalidInsertion("insertion arc out of range");
  if (!std::isfinite(new_chord_length) || !(new_chord_length > 0.0)) {
    throw InvalidInsertion("new chord length must be finite and positive");
  }
  Xoshiro256 rng(seed);
  double t1 = rng.uniform_open01();
  double t2 = rng.uniform_open01();
  if (first_arc == second_arc && t1 == t2) throw InvalidInsertion("split points coincide");

  // Per old arc, the split fractions measured from its start point.
  std::vector<std::vector<double>> splits(m);
  splits[first_arc].push_back(t1);
  splits[second_arc].push_back(t2);

  // Walk the circle from old point m-1 (the start of arc 0), emitting the new
  // points of arc a and then old point a.
  ChordDiagram out;
  out.n = cd.n + 1;
  std::vector<std::size_t> old_to_new(m);
  std::size_t new_first = 0;
  std::size_t new_second = 0;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<double> fr = splits[a];
    std::vector<bool> is_first(fr.size(), false);
    if (a == first_arc) is_first[0] = true;
    if (fr.size() == 2 && fr[1] < fr[0]) {
      std::swap(fr[0], fr[1]);
      is_first = {false, true};
    }
    double prev = 0.0;
    for (std::size_t s = 0; s < fr.size(); ++s) {
      out.arcs.push_back((fr[s] - prev) * cd.arcs[a]);
      prev = fr[s];
      (is_first[s] ? new_first : new_second) = out.arcs.size() - 1;
    }
    out.arcs.push_back(cd.arcs[a] - prev * cd.arcs[a]);
    old_to_new[a] = out.arcs.size() - 1;
  }
  for (std::size_t k = 0; k < cd.n; ++k) {
    out.matching.emplace_back(old_to_new[cd.matching[k].first], old_to_new[cd.matching[k].second]);
    out.chords.push_back(cd.chords[k]);
  }
  out.matching.emplace_back(new_first, new_second);
  out.chords.push_back(new_chord_length);
  for (auto& p : out.matching) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  return out;
}

}  // namespace ortho

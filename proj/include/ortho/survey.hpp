#pragma once

#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ortho/bounds.hpp"
#include "ortho/chord_diagram.hpp"
#include "ortho/lim_solver.hpp"
#include "ortho/oracle.hpp"
#include "ortho/rng.hpp"

namespace ortho {

struct SurveyConfig {
  std::size_t n_max = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  std::size_t oracle_every = 10;
  std::uint64_t oracle_node_cap = 20'000'000;
  std::size_t threads = 0;  // 0: hardware concurrency
  LengthRange arc_range{};
  LengthRange chord_range{};
};

struct SurveyRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<double> arc_lengths;
  std::vector<double> chord_lengths;
  double h = 0.0;
  double circle_length = 0.0;
  InequalityReport report;
  std::optional<double> oracle_h;
  double runtime_ms = 0.0;
};

inline constexpr const char* kSurveyHeader =
    "seed,n,h,L,lower,middle,upper,slack_lower,slack_upper,oracle_h,runtime_ms";

inline SurveyRecord run_trial(const SurveyConfig& config, std::size_t index) {
  const auto started = std::chrono::steady_clock::now();
  SurveyRecord rec;
  rec.seed = derive_seed(config.seed, index);
  rec.n = 1 + static_cast<std::size_t>(Xoshiro256(rec.seed).below(config.n_max));
  const ChordDiagram cd =
      random_chord_diagram(rec.n, rec.seed, config.arc_range, config.chord_range);
  rec.arc_lengths = cd.arcs;
  rec.chord_lengths = cd.chords;
  rec.circle_length = cd.circle_length();
  const MetricGraph g = realize_graph(cd);
  rec.h = volume_entropy(g).h;
  rec.report = graph_bounds(cd, rec.h);
  if (config.with_oracle && config.oracle_every > 0 && index % config.oracle_every == 0) {
    try {
      rec.oracle_h = entropy_estimate(g, 8.0 / rec.h, 14.0 / rec.h, 0, config.oracle_node_cap).value;
    } catch (const BudgetExceeded&) {
    }
  }
  rec.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

/// Runs every trial on a worker pool. Records are stored by trial index, so
/// the result does not depend on scheduling.
inline std::vector<SurveyRecord> run_survey(const SurveyConfig& config) {
  if (config.n_max == 0) throw InvalidSpec("n-max must be positive");
  std::vector<SurveyRecord> records(config.trials);
  std::size_t workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, config.trials));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < config.trials && !failed;) {
      try {
        records[i] = run_trial(config, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv_row(std::ostream& out, const SurveyRecord& r) {
  const InequalityReport& b = r.report;
  out << r.seed << ',' << r.n << ',' << format_double(r.h) << ','
      << format_double(r.circle_length) << ',' << format_double(b.lower) << ','
      << format_double(b.middle) << ',' << format_double(b.upper) << ','
      << format_double(b.slack_lower) << ',' << format_double(b.slack_upper) << ','
      << (r.oracle_h ? format_double(*r.oracle_h) : std::string()) << ','
      << format_double(r.runtime_ms) << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<SurveyRecord>& records) {
  out << kSurveyHeader << '\n';
  for (const SurveyRecord& r : records) write_csv_row(out, r);
}

}  // namespace ortho

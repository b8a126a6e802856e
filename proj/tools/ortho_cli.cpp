// ortho: volume entropy of metric graphs and Basmajian-type bounds for chord graphs.
//
// Exit codes: 0 ok, 2 input error, 3 numeric non-convergence, 4 property
// violation, 5 I/O failure. Options may also be given through ORTHO_*
// environment variables; flags take precedence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ortho/ortho.hpp"

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kInput = 2, kNumeric = 3, kViolation = 4, kIo = 5 };

struct Options {
  std::string source;
  double tol = 1e-12;
  bool no_prune = false;
  bool pretty = false;
  std::string variant = "graph";

  std::size_t n_max = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string out = "survey.csv";
  bool with_oracle = false;
  std::size_t threads = 0;

  std::size_t remark_n = 50;
  std::size_t remark_trials = 10000;
};

void emit(const json& doc, bool pretty) { std::cout << doc.dump(pretty ? 2 : -1) << '\n'; }

ortho::MetricGraph load_graph(const json& doc) {
  if (ortho::io::looks_like_diagram(doc)) {
    return ortho::realize_graph(ortho::io::diagram_from_json(doc));
  }
  return ortho::MetricGraph(ortho::io::graph_from_json(doc));
}

int cmd_entropy(const Options& opt) {
  const ortho::MetricGraph g = load_graph(ortho::io::load(opt.source));
  ortho::EntropyOptions eo;
  eo.tol_h = opt.tol;
  eo.auto_prune = !opt.no_prune;
  const ortho::EntropyResult r = ortho::volume_entropy(g, eo);
  json bracket = json::array();
  if (r.bracket) bracket = {r.bracket->lo, r.bracket->hi};
  json doc = {{"h", r.h},
              {"residual", r.residual},
              {"bracket", bracket},
              {"betti", ortho::betti(r.core)},
              {"pruned_vertices", r.pruned_vertices}};
  if (opt.pretty) doc["perron_vector"] = r.perron_vector;
  emit(doc, opt.pretty);
  return kOk;
}

int cmd_verify(const Options& opt) {
  const json doc = ortho::io::load(opt.source);
  if (!ortho::io::looks_like_diagram(doc)) {
    throw ortho::InvalidSpec("verify expects a chord diagram document");
  }
  const ortho::ChordDiagram cd = ortho::io::diagram_from_json(doc);
  ortho::EntropyOptions eo;
  eo.tol_h = opt.tol;
  const double h = ortho::volume_entropy(ortho::realize_graph(cd), eo).h;
  const ortho::InequalityReport rep = ortho::graph_bounds(cd, h);
  const double circle = cd.circle_length();
  json out = {{"variant", opt.variant},
              {"h", h},
              {"L", circle},
              {"lower", rep.lower},
              {"middle", rep.middle},
              {"upper", rep.upper},
              {"slack_lower", rep.slack_lower},
              {"slack_upper", rep.slack_upper},
              {"strict_lower", rep.strict_lower},
              {"strict_upper", rep.strict_upper}};
  bool ok = rep.strict();
  if (opt.variant != "graph") {
    const auto variant = opt.variant == "eq_basm" ? ortho::BoundVariant::eq_basm
                                                  : ortho::BoundVariant::theorem1;
    const double bound = ortho::surface_lower_bound(ortho::Orthospectrum(cd.chords), h, variant);
    out["surface_bound"] = bound;
    out["surface_slack"] = circle - bound;
    ok = ok && circle > bound;
  }
  emit(out, opt.pretty);
  return ok ? kOk : kViolation;
}

int cmd_survey(const Options& opt) {
  ortho::SurveyConfig config;
  config.n_max = opt.n_max;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.with_oracle = opt.with_oracle;
  config.threads = opt.threads;
  const std::vector<ortho::SurveyRecord> records = ortho::run_survey(config);

  std::ofstream file(opt.out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << opt.out << " for writing\n";
    return kIo;
  }
  ortho::write_csv(file, records);
  file.close();
  if (!file) {
    std::cerr << "failed writing " << opt.out << '\n';
    return kIo;
  }

  std::size_t violations = 0;
  std::size_t oracle_rows = 0;
  double worst_oracle_gap = 0.0;
  for (const auto& r : records) {
    if (!r.report.strict()) ++violations;
    if (r.oracle_h) {
      ++oracle_rows;
      worst_oracle_gap = std::max(worst_oracle_gap, std::abs(*r.oracle_h - r.h));
    }
  }
  json summary = {{"trials", records.size()}, {"violations", violations}, {"out", opt.out}};
  if (opt.with_oracle) {
    summary["oracle_rows"] = oracle_rows;
    summary["max_oracle_gap"] = worst_oracle_gap;
  }
  emit(summary, opt.pretty);
  return violations == 0 ? kOk : kViolation;
}

int cmd_remark(const Options& opt) {
  std::size_t failures = 0;
  for (std::size_t t = 0; t < opt.remark_trials; ++t) {
    const auto inst = ortho::random_remark_instance(opt.remark_n, ortho::derive_seed(opt.seed, t));
    if (!ortho::verify_claim(inst).holds) ++failures;
  }
  emit({{"instances", opt.remark_trials},
        {"failures", failures},
        {"n_max", opt.remark_n},
        {"seed", opt.seed}},
       opt.pretty);
  return failures == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume entropy of metric graphs and Basmajian-type inequalities.\n"
               "Options fall back to ORTHO_* environment variables, then to defaults."};
  app.require_subcommand(1);
  Options opt;

  auto* entropy = app.add_subcommand("entropy", "volume entropy of a graph or chord diagram");
  entropy->add_option("path", opt.source, "graph or chord diagram JSON (file or inline)")->required();
  entropy->add_option("--tol", opt.tol, "bisection tolerance on h")->envname("ORTHO_TOL");
  entropy->add_flag("--no-prune", opt.no_prune, "fail instead of pruning degree-1 vertices");
  entropy->add_flag("--pretty", opt.pretty, "indented output, including the Perron vector");

  auto* verify = app.add_subcommand("verify", "check the double inequality on a chord diagram");
  verify->add_option("diagram", opt.source, "chord diagram JSON (file or inline)")->required();
  verify->add_option("--variant", opt.variant, "graph | theorem1 | eq_basm")
      ->check(CLI::IsMember({"graph", "theorem1", "eq_basm"}))
      ->envname("ORTHO_VARIANT");
  verify->add_option("--tol", opt.tol, "bisection tolerance on h")->envname("ORTHO_TOL");
  verify->add_flag("--pretty", opt.pretty, "indented output");

  auto* survey = app.add_subcommand("survey", "seeded random chord diagram survey to CSV");
  survey->add_option("--n-max", opt.n_max, "largest number of chords")
      ->check(CLI::PositiveNumber)
      ->envname("ORTHO_N_MAX");
  survey->add_option("--trials", opt.trials, "number of diagrams")
      ->check(CLI::PositiveNumber)
      ->envname("ORTHO_TRIALS");
  survey->add_option("--seed", opt.seed, "base seed")->envname("ORTHO_SEED");
  survey->add_option("--out", opt.out, "CSV output path")->envname("ORTHO_OUT");
  survey->add_flag("--with-oracle", opt.with_oracle, "add ball-growth estimates on every 10th trial");
  survey->add_option("--threads", opt.threads, "worker threads (0: all cores)")
      ->envname("ORTHO_THREADS");
  survey->add_flag("--pretty", opt.pretty, "indented summary");

  auto* remark = app.add_subcommand("remark", "stress-test the C(i) counting claim");
  remark->add_option("--N", opt.remark_n, "largest number of segments")
      ->check(CLI::PositiveNumber)
      ->envname("ORTHO_REMARK_N");
  remark->add_option("--trials", opt.remark_trials, "number of instances")
      ->check(CLI::PositiveNumber)
      ->envname("ORTHO_TRIALS");
  remark->add_option("--seed", opt.seed, "base seed")->envname("ORTHO_SEED");
  remark->add_flag("--pretty", opt.pretty, "indented output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*entropy) return cmd_entropy(opt);
    if (*verify) return cmd_verify(opt);
    if (*survey) return cmd_survey(opt);
    if (*remark) return cmd_remark(opt);
  } catch (const ortho::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ortho::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
  return kInput;
}

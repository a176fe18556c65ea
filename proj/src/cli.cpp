#include "mfio/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mfio/bench.hpp"
#include "mfio/ingest.hpp"
#include "mfio/pair_count.hpp"
#include "mfio/report.hpp"

namespace mfio {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CommonFlags {
  bool quiet = false;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--quiet", flags.quiet, "Suppress informational messages on stderr");
  cmd->add_flag("--json", flags.json, "Emit machine-readable JSON on stdout");
}

struct AnnealFlags {
  std::optional<std::uint32_t> restarts;
  std::optional<std::uint32_t> sweeps;
  std::optional<double> t_initial;
  std::optional<double> t_final;

  void add(CLI::App* cmd) {
    cmd->add_option("--restarts", restarts, "Annealing restarts (qubo solver)");
    cmd->add_option("--sweeps", sweeps, "Sweeps per restart (qubo solver)");
    cmd->add_option("--t-initial", t_initial, "Initial annealing temperature (default k+1)");
    cmd->add_option("--t-final", t_final, "Final annealing temperature");
  }

  void apply(AnnealParams& p) const {
    if (restarts) p.restarts = *restarts;
    if (sweeps) p.sweeps = *sweeps;
    if (t_initial) p.initial_temperature = *t_initial;
    if (t_final) p.final_temperature = *t_final;
  }
};

template <typename Map>
CLI::Validator choice(const Map& map) {
  return CLI::CheckedTransformer(map, CLI::ignore_case);
}

const std::map<std::string, SolverKind> kSolvers{{"exact", SolverKind::Exact}, {"qubo", SolverKind::Qubo}};
const std::map<std::string, InputFormat> kFormats{{"items", InputFormat::ItemLines}, {"words", InputFormat::WordLines}};
const std::map<std::string, Preset> kPresets{
    {"config1", Preset::Config1}, {"config2", Preset::Config2}, {"config3", Preset::Config3}, {"config4", Preset::Config4}};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::IoError, "cannot write " + path.string());
  f << content;
  if (!f) throw Error(Errc::IoError, "write failed for " + path.string());
}

struct MineArgs {
  CommonFlags common;
  std::string input;
  InputFormat format = InputFormat::ItemLines;
  std::size_t n = 0;
  int r = 10;
  SolverKind solver = SolverKind::Exact;
  std::uint64_t seed = 0;
  AnnealFlags anneal;
  std::string dump_matrix;
  std::string dump_qubo;
};

int cmd_mine(const MineArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 2) {
    err << "usage error: --n must be at least 2\n";
    return kExitUsage;
  }
  StageTimings timings;
  auto start = Clock::now();
  const auto db = load_transactions(a.input, a.format);
  timings.ingest_ms = ms_since(start);

  start = Clock::now();
  const auto matrix = count_pairs(db);
  timings.count_ms = ms_since(start);

  if (!a.dump_matrix.empty()) {
    std::ostringstream csv;
    write_matrix_csv(matrix, csv);
    write_file(a.dump_matrix, csv.str());
  }

  MineRequest req;
  req.n = a.n;
  req.r = a.r;
  req.solver = a.solver;
  req.seed = a.seed;
  a.anneal.apply(req.anneal);

  MineOutcome outcome;
  start = Clock::now();
  try {
    outcome = mine(matrix, req);
  } catch (const NoCliqueFound& e) {
    timings.optimize_ms = ms_since(start);
    nlohmann::json doc{{"error", "NoCliqueFound"},
                       {"trace", trace_to_json(e.trace())},
                       {"solver", std::string(solver_name(a.solver))},
                       {"timings", timings_to_json(timings)}};
    out << doc.dump(2) << '\n';
    err << e.what() << '\n';
    return kExitNoClique;
  }
  timings.optimize_ms = ms_since(start);

  if (!a.dump_qubo.empty()) {
    std::ostringstream q;
    write_qubo_sparse(build_qubo(matrix, outcome.t_best), q);
    write_file(a.dump_qubo, q.str());
  }

  auto doc = outcome_to_json(outcome, db.catalog());
  doc["timings"] = timings_to_json(timings);
  out << doc.dump(2) << '\n';
  if (!a.common.quiet)
    err << "mined " << a.n << "-set from " << db.size() << " transactions over " << db.item_count()
        << " items (t_best = " << outcome.t_best.value() << ")\n";
  return kExitOk;
}

struct GenArgs {
  CommonFlags common;
  std::optional<Preset> preset_kind;
  std::size_t i = 100;
  std::size_t n = 0;
  std::optional<std::size_t> t;
  std::optional<std::uint64_t> kmax;
  std::uint64_t planted_reps = 200;
  std::size_t distractors = 99;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  GenConfig config;
  if (a.preset_kind) {
    config = preset(*a.preset_kind, a.i, a.n, a.seed);
  } else {
    if (!a.t || !a.kmax) {
      err << "usage error: without --preset both --t and --kmax are required\n";
      return kExitUsage;
    }
    config.i_size = a.i;
    config.n = a.n;
    config.t_size = *a.t;
    config.k_max = *a.kmax;
    config.seed = a.seed;
  }
  config.planted_reps = a.planted_reps;
  config.distractor_count = a.distractors;
  const auto generated = generate(config);

  std::ostringstream lines;
  write_item_lines(generated.db, lines);
  write_file(a.out_path, lines.str());
  const auto sidecar = a.out_path + ".planted.json";
  std::ostringstream planted;
  write_planted_sidecar(generated.planted, planted);
  write_file(sidecar, planted.str());

  if (a.common.json) {
    nlohmann::json doc{{"out", a.out_path},
                       {"sidecar", sidecar},
                       {"transactions", generated.db.size()},
                       {"planted", generated.db.tokens_of(generated.planted)}};
    out << doc.dump(2) << '\n';
  }
  if (!a.common.quiet) err << "wrote " << generated.db.size() << " transactions to " << a.out_path << '\n';
  return kExitOk;
}

struct BenchArgs {
  CommonFlags common;
  Preset preset_kind = Preset::Config1;
  std::string grid;
  std::size_t trials = 10;
  SolverKind solver = SolverKind::Exact;
  std::uint64_t seed = 0;
  int r = 10;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::string report;
  AnnealFlags anneal;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.trials == 0) {
    err << "usage error: --trials must be positive\n";
    return kExitUsage;
  }
  GridSpec spec;
  spec.preset = a.preset_kind;
  std::tie(spec.i_values, spec.n_values) = parse_grid(a.grid);
  spec.trials = a.trials;
  spec.seed = a.seed;
  spec.request.r = a.r;
  spec.request.solver = a.solver;
  a.anneal.apply(spec.request.anneal);
  spec.oracle_budget = a.oracle_budget;

  const auto trials = run_grid(spec);
  const auto cells = summarize(trials);
  ReportHeader header{version_string(), a.preset_kind, a.seed, std::string(solver_name(a.solver)), a.trials, a.r};

  std::ostringstream md;
  write_bench_markdown(header, cells, md);
  if (!a.report.empty()) {
    fs::path base(a.report);
    if (base.extension() == ".csv" || base.extension() == ".md") base.replace_extension();
    std::ostringstream csv;
    write_bench_csv(trials, csv);
    write_file(fs::path(base).concat(".csv"), csv.str());
    write_file(fs::path(base).concat(".md"), md.str());
    if (!a.common.quiet) err << "wrote " << base.string() << ".csv and .md\n";
  }

  if (a.common.json) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cells)
      arr.push_back({{"i", c.i_size},
                     {"n", c.n},
                     {"successes", c.successes},
                     {"trials", c.trials},
                     {"unverified", c.unverified},
                     {"mean_ms_count", c.mean_ms_count},
                     {"mean_ms_optimize", c.mean_ms_optimize}});
    nlohmann::json doc{{"version", header.version}, {"preset", std::string(preset_name(a.preset_kind))},
                       {"seed", a.seed},           {"solver", header.solver},
                       {"trials", a.trials},       {"r", a.r},
                       {"cells", arr}};
    out << doc.dump(2) << '\n';
  } else {
    out << md.str();
  }
  return kExitOk;
}

struct ScalingArgs {
  CommonFlags common;
  std::string scales = "1,4";
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::Exact;
  int r = 10;
  std::size_t repeats = 3;
  std::string report;
  AnnealFlags anneal;
};

int cmd_scaling(const ScalingArgs& a, std::ostream& out, std::ostream& err) {
  const auto scales = parse_size_list(a.scales);
  MineRequest req;
  req.r = a.r;
  req.solver = a.solver;
  a.anneal.apply(req.anneal);

  auto runs = nlohmann::json::array();
  std::vector<ScalingRun> results;
  for (auto s : scales) {
    if (s == 0) {
      err << "usage error: scales must be positive\n";
      return kExitUsage;
    }
    results.push_back(run_scaling(s, a.seed, req, a.repeats));
    runs.push_back(scaling_to_json(results.back()));
    if (!a.common.quiet)
      err << "scale " << s << ": " << results.back().db_size << " transactions, "
          << (results.back().correct ? "planted set recovered" : "planted set NOT recovered") << '\n';
  }
  nlohmann::json doc{{"version", version_string()},
                     {"seed", a.seed},
                     {"solver", std::string(solver_name(a.solver))},
                     {"r", a.r},
                     {"runs", runs}};
  if (results.size() >= 2) {
    const auto& first = results.front().timings;
    const auto& last = results.back().timings;
    doc["timing_ratios"] = {{"optimize", last.optimize_ms / first.optimize_ms},
                            {"count", last.count_ms / first.count_ms},
                            {"ingest", last.ingest_ms / first.ingest_ms}};
  }
  if (!a.report.empty()) write_file(a.report, doc.dump(2) + "\n");
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Most frequent N-set mining by threshold bisection over max-clique queries", "mfio"};
  app.require_subcommand(1);

  MineArgs mine_args;
  auto* mine_cmd = app.add_subcommand("mine", "Find the most likely most frequent N-set in a file");
  add_common(mine_cmd, mine_args.common);
  mine_cmd->add_option("--input", mine_args.input, "Transaction file")->required();
  mine_cmd->add_option("--format", mine_args.format, "items | words")->transform(choice(kFormats));
  mine_cmd->add_option("--n", mine_args.n, "Set size N")->required();
  mine_cmd->add_option("--r", mine_args.r, "Bisection steps R");
  mine_cmd->add_option("--solver", mine_args.solver, "exact | qubo")->transform(choice(kSolvers));
  mine_cmd->add_option("--seed", mine_args.seed, "Seed for the qubo solver");
  mine_cmd->add_option("--dump-matrix", mine_args.dump_matrix, "Write the pair matrix as CSV");
  mine_cmd->add_option("--dump-qubo", mine_args.dump_qubo, "Write the QUBO at t_best as 'i j value' lines");
  mine_args.anneal.add(mine_cmd);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic database with a planted N-set");
  add_common(gen_cmd, gen_args.common);
  gen_cmd->add_option("--preset", gen_args.preset_kind, "config1 | config2 | config3 | config4")
      ->transform(choice(kPresets));
  gen_cmd->add_option("--i", gen_args.i, "Item count |I|");
  gen_cmd->add_option("--n", gen_args.n, "Planted set size N")->required();
  gen_cmd->add_option("--t", gen_args.t, "Transaction size T");
  gen_cmd->add_option("--kmax", gen_args.kmax, "Maximum distractor repetitions");
  gen_cmd->add_option("--planted-reps", gen_args.planted_reps, "Repetitions of the planted set");
  gen_cmd->add_option("--distractors", gen_args.distractors, "Number of distractor sets");
  gen_cmd->add_option("--seed", gen_args.seed, "Generator seed");
  gen_cmd->add_option("--out", gen_args.out_path, "Output item-lines file")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Reproduce a success grid for one configuration");
  add_common(bench_cmd, bench_args.common);
  bench_cmd->add_option("--preset", bench_args.preset_kind, "config1 | config2 | config3 | config4")
      ->transform(choice(kPresets))
      ->required();
  bench_cmd->add_option("--grid", bench_args.grid, "\"I-list x N-list\", e.g. \"100,200x4,8\"")->required();
  bench_cmd->add_option("--trials", bench_args.trials, "Trials per cell");
  bench_cmd->add_option("--solver", bench_args.solver, "exact | qubo")->transform(choice(kSolvers));
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed; trial t uses seed + t");
  bench_cmd->add_option("--r", bench_args.r, "Bisection steps R");
  bench_cmd->add_option("--oracle-budget", bench_args.oracle_budget, "Candidate limit for the exact oracle");
  bench_cmd->add_option("--report", bench_args.report, "Report base path; writes .csv and .md");
  bench_args.anneal.add(bench_cmd);

  ScalingArgs scaling_args;
  auto* scaling_cmd = app.add_subcommand("scaling", "Planted 20-set experiment at several database sizes");
  add_common(scaling_cmd, scaling_args.common);
  scaling_cmd->add_option("--scales", scaling_args.scales, "Comma list of multipliers of the 25k base");
  scaling_cmd->add_option("--seed", scaling_args.seed, "Generator seed");
  scaling_cmd->add_option("--solver", scaling_args.solver, "exact | qubo")->transform(choice(kSolvers));
  scaling_cmd->add_option("--r", scaling_args.r, "Bisection steps R");
  scaling_cmd->add_option("--repeats", scaling_args.repeats, "Optimize-stage repetitions (median reported)");
  scaling_cmd->add_option("--report", scaling_args.report, "Write the JSON report here too");
  scaling_args.anneal.add(scaling_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(mine_args, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen_args, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out, err);
    if (scaling_cmd->parsed()) return cmd_scaling(scaling_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::NoCliqueFound ? kExitNoClique : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mfio

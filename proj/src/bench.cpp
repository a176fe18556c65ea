#include "mfio/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "mfio/ingest.hpp"
#include "mfio/pair_count.hpp"

#ifndef MFIO_VERSION
#define MFIO_VERSION "unknown"
#endif

namespace mfio {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string version_string() { return MFIO_VERSION; }

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto first = part.find_first_not_of(" \t");
    const auto last = part.find_last_not_of(" \t");
    std::size_t v = 0;
    const char* begin = first == std::string::npos ? part.data() : part.data() + first;
    const char* end = first == std::string::npos ? part.data() : part.data() + last + 1;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (begin == end || ec != std::errc{} || ptr != end)
      throw Error(Errc::InvalidArgument, "bad number '" + part + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw Error(Errc::InvalidArgument, "malformed list '" + text + "'");
  return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw Error(Errc::InvalidArgument, "grid must look like 'I-list x N-list'");
  return {parse_size_list(text.substr(0, x)), parse_size_list(text.substr(x + 1))};
}

TrialRecord run_trial(Preset which, std::size_t i_size, std::size_t n, std::size_t trial, std::uint64_t seed,
                      const MineRequest& request, std::uint64_t oracle_budget) {
  TrialRecord rec;
  rec.config = which;
  rec.i = i_size;
  rec.n = n;
  rec.trial = trial;
  rec.seed = seed;

  const auto generated = generate(preset(which, i_size, n, seed));
  const auto& db = generated.db;

  auto start = Clock::now();
  const auto matrix = count_pairs(db);
  rec.count_ms = ms_since(start);

  auto req = request;
  req.n = n;
  req.seed = seed;
  start = Clock::now();
  try {
    const auto outcome = mine(matrix, req);
    rec.optimize_ms = ms_since(start);
    rec.t_best = outcome.t_best;
    rec.mined = outcome.itemset;
  } catch (const Error& e) {
    rec.optimize_ms = ms_since(start);
    rec.error = e.what();
    return rec;
  }

  try {
    // Any known set's frequency bounds the maximum from below.
    const auto mined_count = frequency_of_set(db, rec.mined);
    const auto floor = std::max<std::uint64_t>(1, std::max(mined_count, frequency_of_set(db, generated.planted)));
    const auto top = most_frequent_nset_at_least(db, matrix, n, floor, oracle_budget);
    rec.oracle_verified = true;
    rec.success = mined_count == top.max_count;
  } catch (const Error& e) {
    if (e.code() != Errc::OracleBudgetExceeded) throw;
    rec.oracle_verified = false;
    rec.success = rec.mined == generated.planted;
  }
  return rec;
}

std::vector<TrialRecord> run_grid(const GridSpec& spec) {
  if (spec.trials == 0) throw Error(Errc::InvalidArgument, "trials must be positive");
  struct Job {
    std::size_t i, n, trial;
  };
  std::vector<Job> jobs;
  for (auto i : spec.i_values)
    for (auto n : spec.n_values) {
      // Surface configuration errors before any work starts.
      (void)preset(spec.preset, i, n, spec.seed);
      for (std::size_t t = 0; t < spec.trials; ++t) jobs.push_back({i, n, t});
    }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::tie(a.i, a.n, a.trial) < std::tie(b.i, b.n, b.trial);
  });

  std::vector<TrialRecord> records(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < count; ++j) {
    const auto& job = jobs[static_cast<std::size_t>(j)];
    records[static_cast<std::size_t>(j)] = run_trial(spec.preset, job.i, job.n, job.trial, spec.seed + job.trial,
                                                     spec.request, spec.oracle_budget);
  }
  return records;
}

std::vector<CellResult> summarize(const std::vector<TrialRecord>& trials) {
  std::map<std::pair<std::size_t, std::size_t>, CellResult> cells;
  for (const auto& t : trials) {
    auto& c = cells[{t.i, t.n}];
    c.i_size = t.i;
    c.n = t.n;
    ++c.trials;
    c.successes += t.success ? 1 : 0;
    c.unverified += (t.oracle_verified || !t.error.empty()) ? 0 : 1;
    c.mean_ms_count += t.count_ms;
    c.mean_ms_optimize += t.optimize_ms;
  }
  std::vector<CellResult> out;
  for (auto& [key, c] : cells) {
    c.mean_ms_count /= static_cast<double>(c.trials);
    c.mean_ms_optimize /= static_cast<double>(c.trials);
    out.push_back(c);
  }
  return out;
}

void write_bench_csv(const std::vector<TrialRecord>& trials, std::ostream& out) {
  out << "config,i,n,trial,seed,success,oracle_verified,t_best,count_ms,optimize_ms\n";
  for (const auto& t : trials) {
    out << preset_name(t.config) << ',' << t.i << ',' << t.n << ',' << t.trial << ',' << t.seed << ','
        << (t.success ? 1 : 0) << ',' << (t.oracle_verified ? 1 : 0) << ','
        << (t.t_best ? decimal(t.t_best->value()) : std::string()) << ',' << decimal(t.count_ms) << ','
        << decimal(t.optimize_ms) << '\n';
  }
}

void write_bench_markdown(const ReportHeader& header, const std::vector<CellResult>& cells, std::ostream& out) {
  std::vector<std::size_t> is, ns;
  for (const auto& c : cells) {
    is.push_back(c.i_size);
    ns.push_back(c.n);
  }
  std::sort(is.begin(), is.end());
  is.erase(std::unique(is.begin(), is.end()), is.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  out << "# MFIO success grid: " << preset_name(header.preset);
  if (header.preset == Preset::Config1) out << " (reconstructed parameters)";
  out << "\n\n";
  out << "- version: " << header.version << '\n';
  out << "- solver: " << header.solver << ", R = " << header.r << '\n';
  out << "- seed: " << header.seed << " (trial t uses seed + t)\n";
  out << "- trials per cell: " << header.trials << '\n';
  out << "- success: mined set's frequency equals the exact maximum over all N-sets; "
         "cells marked * fell back to planted-set identity for some trials (oracle over budget)\n\n";

  out << "| I \\ N |";
  for (auto n : ns) out << ' ' << n << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < ns.size(); ++c) out << "---|";
  out << '\n';
  for (auto i : is) {
    out << "| " << i << " |";
    for (auto n : ns) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const CellResult& c) { return c.i_size == i && c.n == n; });
      if (it == cells.end()) {
        out << " - |";
      } else {
        out << ' ' << it->successes << (it->unverified ? "*" : "") << " |";
      }
    }
    out << '\n';
  }
}

ScalingRun run_scaling(std::size_t scale, std::uint64_t seed, const MineRequest& request,
                       std::size_t optimize_repeats) {
  PlantedComparisonConfig config;
  config.scale = scale;
  config.seed = seed;
  const auto generated = generate_planted_comparison(config);

  std::stringstream text;
  write_item_lines(generated.db, text);

  ScalingRun run;
  run.scale = scale;
  auto start = Clock::now();
  const auto db = parse_item_lines(text);
  run.timings.ingest_ms = ms_since(start);
  run.db_size = db.size();

  start = Clock::now();
  const auto matrix = count_pairs(db);
  run.timings.count_ms = ms_since(start);
  run.matrix_entries = matrix.entry_count();

  auto req = request;
  req.n = config.planted_size;
  req.seed = seed;
  std::vector<double> samples;
  MineOutcome outcome;
  for (std::size_t rep = 0; rep < std::max<std::size_t>(1, optimize_repeats); ++rep) {
    start = Clock::now();
    outcome = mine(matrix, req);
    samples.push_back(ms_since(start));
  }
  std::sort(samples.begin(), samples.end());
  run.timings.optimize_ms = samples[samples.size() / 2];

  run.mined_tokens = db.tokens_of(outcome.itemset);
  const auto expected = generated.db.tokens_of(generated.planted);
  auto sorted_mined = run.mined_tokens;
  auto sorted_expected = expected;
  std::sort(sorted_mined.begin(), sorted_mined.end());
  std::sort(sorted_expected.begin(), sorted_expected.end());
  run.correct = sorted_mined == sorted_expected;
  return run;
}

}  // namespace mfio

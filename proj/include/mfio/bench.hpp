#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mfio/datagen.hpp"
#include "mfio/mine.hpp"
#include "mfio/oracle.hpp"

namespace mfio {

struct StageTimings {
  double ingest_ms = 0.0;
  double count_ms = 0.0;
  double optimize_ms = 0.0;
};

/// One generate -> count -> mine -> verify run.
struct TrialRecord {
  Preset config = Preset::Config1;
  std::size_t i = 0;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool success = false;
  /// False when the oracle exceeded its budget and the planted set was used.
  bool oracle_verified = false;
  std::optional<Threshold> t_best;
  double count_ms = 0.0;
  double optimize_ms = 0.0;
  ItemSet mined;
  std::string error;
};

struct CellResult {
  std::size_t i_size = 0;
  std::size_t n = 0;
  std::size_t successes = 0;
  std::size_t trials = 0;
  std::size_t unverified = 0;
  double mean_ms_count = 0.0;
  double mean_ms_optimize = 0.0;
};

struct GridSpec {
  Preset preset = Preset::Config1;
  std::vector<std::size_t> i_values;
  std::vector<std::size_t> n_values;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  /// n, seed are filled per trial.
  MineRequest request{};
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

/// Parses "25,50,100x4,6,8" into (I values, N values). InvalidArgument on
/// malformed input.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> parse_grid(const std::string& text);
std::vector<std::size_t> parse_size_list(const std::string& text);

/// Success means the mined set's true frequency equals the exact maximum over
/// all n-sets; ties with the planted set count. If the oracle budget is
/// exceeded the mined set must equal the planted set instead.
TrialRecord run_trial(Preset preset, std::size_t i_size, std::size_t n, std::size_t trial, std::uint64_t seed,
                      const MineRequest& request, std::uint64_t oracle_budget);

/// Trials for every (I, N, trial) of the grid, sorted by (I, N, trial). Trial t
/// uses seed + t. Cells whose configuration is invalid throw InvalidGenConfig.
std::vector<TrialRecord> run_grid(const GridSpec& spec);
std::vector<CellResult> summarize(const std::vector<TrialRecord>& trials);

struct ReportHeader {
  std::string version;
  Preset preset = Preset::Config1;
  std::uint64_t seed = 0;
  std::string solver;
  std::size_t trials = 0;
  int r = 10;
};

void write_bench_csv(const std::vector<TrialRecord>& trials, std::ostream& out);
void write_bench_markdown(const ReportHeader& header, const std::vector<CellResult>& cells, std::ostream& out);

struct ScalingRun {
  std::size_t scale = 1;
  std::size_t db_size = 0;
  std::size_t matrix_entries = 0;
  StageTimings timings;
  std::vector<std::string> mined_tokens;
  bool correct = false;
};

/// Planted comparison at `scale`: the generated database is serialised to
/// item lines and parsed back (ingest stage), counted, and mined for the
/// planted size. The optimize time is the median over `optimize_repeats` runs.
ScalingRun run_scaling(std::size_t scale, std::uint64_t seed, const MineRequest& request,
                       std::size_t optimize_repeats = 3);

std::string version_string();

}  // namespace mfio

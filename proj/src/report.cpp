#include "mfio/report.hpp"

namespace mfio {

nlohmann::json trace_to_json(const std::vector<TraceEntry>& trace) {
  auto out = nlohmann::json::array();
  for (const auto& e : trace)
    out.push_back({{"i", e.iteration}, {"t", e.t.value()}, {"clique_size", e.clique_size}, {"success", e.success}});
  return out;
}

nlohmann::json outcome_to_json(const MineOutcome& outcome, const ItemCatalog& catalog) {
  auto tokens = [&](const ItemSet& ids) {
    auto arr = nlohmann::json::array();
    for (auto id : ids) arr.push_back(catalog.name(id));
    return arr;
  };
  return {
      {"itemset", tokens(outcome.itemset)},
      {"t_best", outcome.t_best.value()},
      {"t_best_exact", to_string(outcome.t_best)},
      {"clique", tokens(outcome.clique)},
      {"trace", trace_to_json(outcome.trace)},
      {"solver", outcome.solver},
  };
}

nlohmann::json timings_to_json(const StageTimings& timings) {
  return {{"ingest_ms", timings.ingest_ms}, {"count_ms", timings.count_ms}, {"optimize_ms", timings.optimize_ms}};
}

nlohmann::json scaling_to_json(const ScalingRun& run) {
  return {
      {"scale", run.scale},
      {"db_size", run.db_size},
      {"matrix_entries", run.matrix_entries},
      {"itemset", run.mined_tokens},
      {"correct", run.correct},
      {"timings", timings_to_json(run.timings)},
  };
}

}  // namespace mfio

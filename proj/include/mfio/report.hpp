#pragma once

#include <nlohmann/json.hpp>

#include "mfio/bench.hpp"
#include "mfio/core_model.hpp"

namespace mfio {

nlohmann::json trace_to_json(const std::vector<TraceEntry>& trace);
/// {"itemset": [tokens], "t_best": decimal, "t_best_exact": "p/q", "clique": [tokens],
///  "trace": [{"i", "t", "clique_size", "success"}], "solver": name}
nlohmann::json outcome_to_json(const MineOutcome& outcome, const ItemCatalog& catalog);
nlohmann::json timings_to_json(const StageTimings& timings);
nlohmann::json scaling_to_json(const ScalingRun& run);

}  // namespace mfio

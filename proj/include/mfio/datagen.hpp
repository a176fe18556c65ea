#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "mfio/core_model.hpp"

namespace mfio {

struct GenConfig {
  std::size_t i_size = 0;
  std::size_t n = 0;
  std::size_t t_size = 0;
  std::uint64_t k_max = 1;
  std::uint64_t planted_reps = 200;
  std::size_t distractor_count = 99;
  std::uint64_t seed = 0;

  /// InvalidGenConfig unless n <= t_size <= i_size, 1 <= k_max < planted_reps,
  /// and there are enough distinct n-sets for planted + distractors.
  void validate() const;
};

enum class Preset { Config1, Config2, Config3, Config4 };

std::optional<Preset> parse_preset(std::string_view name);
std::string_view preset_name(Preset preset);

/// Fills t_size and k_max for one of the four evaluation configurations:
/// config1 T=N, k<=180; config2 T=N, k<=110; config3 T=15, k<=180;
/// config4 T=ceil(3N/2), k<=180.
GenConfig preset(Preset name, std::size_t i_size, std::size_t n, std::uint64_t seed);

struct GeneratedDb {
  TransactionDb db;
  ItemSet planted;
};

/// Item v is catalogued as the token v + 1 so files read "1 2 3 ...".
/// One planted n-set (planted_reps transactions) plus distractor_count
/// distinct n-sets, each repeated Uniform{1..k_max} times; every transaction
/// is padded with uniform filler to exactly t_size items, then the order is
/// shuffled. Deterministic in the seed.
GeneratedDb generate(const GenConfig& config);

struct PlantedComparisonConfig {
  std::size_t items = 250;
  std::size_t random_transactions = 24'000;
  std::size_t transaction_size = 22;
  std::size_t planted_size = 20;
  std::size_t planted_reps = 1'000;
  /// Multiplies both transaction counts.
  std::size_t scale = 1;
  std::uint64_t seed = 0;
};

/// Uniform random transactions plus repeated copies of the items 1..planted_size.
GeneratedDb generate_planted_comparison(const PlantedComparisonConfig& config);

/// {"planted": [tokens]}, using the same v + 1 numbering as the generated file.
void write_planted_sidecar(const ItemSet& planted, std::ostream& out);

}  // namespace mfio

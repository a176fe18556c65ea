#include "mfio/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "mfio/oracle.hpp"

namespace mfio {

namespace {

ItemCatalog numbered_catalog(std::size_t items) {
  ItemCatalog catalog;
  for (std::size_t v = 0; v < items; ++v) catalog.intern(std::to_string(v + 1));
  return catalog;
}

// Uniform `count`-subset of `pool` via a partial Fisher-Yates shuffle.
// Reorders `pool`; returns the chosen prefix sorted.
ItemSet sample_from(std::vector<ItemId>& pool, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  ItemSet out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(out.begin(), out.end());
  return out;
}

ItemSet pad(const ItemSet& core, std::size_t t_size, std::size_t i_size, std::mt19937_64& rng) {
  std::vector<ItemId> rest;
  rest.reserve(i_size - core.size());
  for (ItemId v = 0; v < i_size; ++v)
    if (!std::binary_search(core.begin(), core.end(), v)) rest.push_back(v);
  auto filler = sample_from(rest, t_size - core.size(), rng);
  ItemSet tx = core;
  tx.insert(tx.end(), filler.begin(), filler.end());
  std::sort(tx.begin(), tx.end());
  return tx;
}

}  // namespace

void GenConfig::validate() const {
  auto fail = [](const std::string& why) { throw Error(Errc::InvalidGenConfig, why); };
  if (n < 1) fail("n must be positive");
  if (t_size < n) fail("transaction size T must be at least n");
  if (i_size < t_size) fail("transaction size T exceeds the item count");
  if (k_max < 1) fail("k_max must be at least 1");
  if (planted_reps <= k_max) fail("planted_reps must exceed k_max");
  if (binomial_saturating(i_size, n) <= distractor_count)
    fail("not enough distinct " + std::to_string(n) + "-sets for the distractors");
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "config1") return Preset::Config1;
  if (name == "config2") return Preset::Config2;
  if (name == "config3") return Preset::Config3;
  if (name == "config4") return Preset::Config4;
  return std::nullopt;
}

std::string_view preset_name(Preset preset) {
  switch (preset) {
    case Preset::Config1: return "config1";
    case Preset::Config2: return "config2";
    case Preset::Config3: return "config3";
    case Preset::Config4: return "config4";
  }
  return "unknown";
}

GenConfig preset(Preset name, std::size_t i_size, std::size_t n, std::uint64_t seed) {
  GenConfig config;
  config.i_size = i_size;
  config.n = n;
  config.seed = seed;
  switch (name) {
    case Preset::Config1:
      config.t_size = n;
      config.k_max = 180;
      break;
    case Preset::Config2:
      config.t_size = n;
      config.k_max = 110;
      break;
    case Preset::Config3:
      if (n > 15) throw Error(Errc::InvalidGenConfig, "config3 fixes T = 15, so n must be at most 15");
      config.t_size = 15;
      config.k_max = 180;
      break;
    case Preset::Config4:
      config.t_size = (3 * n + 1) / 2;
      config.k_max = 180;
      if (config.t_size > i_size) throw Error(Errc::InvalidGenConfig, "config4 needs 3n/2 <= |I|");
      break;
  }
  config.validate();
  return config;
}

GeneratedDb generate(const GenConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::vector<ItemId> pool(config.i_size);
  std::iota(pool.begin(), pool.end(), ItemId{0});

  const auto planted = sample_from(pool, config.n, rng);
  std::set<ItemSet> used{planted};
  std::vector<ItemSet> distractors;
  distractors.reserve(config.distractor_count);
  while (distractors.size() < config.distractor_count) {
    auto d = sample_from(pool, config.n, rng);
    if (used.insert(d).second) distractors.push_back(std::move(d));
  }

  std::vector<ItemSet> transactions;
  for (std::uint64_t r = 0; r < config.planted_reps; ++r)
    transactions.push_back(pad(planted, config.t_size, config.i_size, rng));
  std::uniform_int_distribution<std::uint64_t> reps(1, config.k_max);
  for (const auto& d : distractors) {
    const auto copies = reps(rng);
    for (std::uint64_t r = 0; r < copies; ++r) transactions.push_back(pad(d, config.t_size, config.i_size, rng));
  }
  std::shuffle(transactions.begin(), transactions.end(), rng);

  return {TransactionDb(numbered_catalog(config.i_size), std::move(transactions)), planted};
}

GeneratedDb generate_planted_comparison(const PlantedComparisonConfig& config) {
  if (config.scale == 0 || config.transaction_size > config.items || config.planted_size > config.items ||
      config.planted_size == 0)
    throw Error(Errc::InvalidGenConfig, "inconsistent planted comparison parameters");
  std::mt19937_64 rng(config.seed);
  std::vector<ItemId> pool(config.items);
  std::iota(pool.begin(), pool.end(), ItemId{0});

  ItemSet planted(config.planted_size);
  std::iota(planted.begin(), planted.end(), ItemId{0});

  std::vector<ItemSet> transactions;
  const auto random_count = config.random_transactions * config.scale;
  const auto planted_count = config.planted_reps * config.scale;
  transactions.reserve(random_count + planted_count);
  for (std::size_t r = 0; r < random_count; ++r)
    transactions.push_back(sample_from(pool, config.transaction_size, rng));
  for (std::size_t r = 0; r < planted_count; ++r) transactions.push_back(planted);
  std::shuffle(transactions.begin(), transactions.end(), rng);

  return {TransactionDb(numbered_catalog(config.items), std::move(transactions)), planted};
}

void write_planted_sidecar(const ItemSet& planted, std::ostream& out) {
  std::vector<std::uint64_t> tokens;
  for (auto v : planted) tokens.push_back(std::uint64_t{v} + 1);
  out << nlohmann::json{{"planted", tokens}}.dump() << '\n';
}

}  // namespace mfio

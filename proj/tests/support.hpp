#pragma once

// Fixtures and brute-force references shared by the unit and acceptance
// suites. Nothing here calls the solver code it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfio/clique.hpp"
#include "mfio/core_model.hpp"
#include "mfio/ingest.hpp"
#include "mfio/qubo.hpp"

namespace mfio::fixture {

inline constexpr const char* kOverlayExample =
    "1,2,4\n"
    "1,2,4\n"
    "1,2,3\n"
    "1,3\n"
    "1,3\n"
    "2,3\n"
    "2,3,4\n";

inline TransactionDb overlay_db() {
  std::istringstream in(kOverlayExample);
  return parse_item_lines(in);
}

inline ItemSet ids(const TransactionDb& db, std::vector<std::string> tokens) { return db.ids_of(tokens); }

/// Brute-force pair count straight from the transactions.
inline std::uint64_t count_pair_naive(const TransactionDb& db, ItemId a, ItemId b) {
  std::uint64_t c = 0;
  for (const auto& tx : db.transactions()) {
    const bool has_a = std::find(tx.begin(), tx.end(), a) != tx.end();
    const bool has_b = std::find(tx.begin(), tx.end(), b) != tx.end();
    c += has_a && has_b;
  }
  return c;
}

/// Random database over `k` items with per-item inclusion probabilities drawn
/// from [p_lo, p_hi]; empty rows are kept (they only dilute frequencies).
inline TransactionDb random_db(std::mt19937_64& rng, std::size_t k, std::size_t transactions, double p_lo = 0.2,
                               double p_hi = 0.8) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(k);
  for (auto& x : p) x = p_lo + (p_hi - p_lo) * u(rng);
  ItemCatalog catalog;
  for (std::size_t v = 0; v < k; ++v) catalog.intern("i" + std::to_string(v));
  std::vector<ItemSet> txs;
  for (std::size_t t = 0; t < transactions; ++t) {
    ItemSet tx;
    for (ItemId v = 0; v < k; ++v)
      if (u(rng) < p[v]) tx.push_back(v);
    txs.push_back(std::move(tx));
  }
  return TransactionDb(std::move(catalog), std::move(txs));
}

/// Counts drawn uniformly in [0, db_size]; not necessarily realisable by any
/// database, which does not matter for graph/QUBO checks.
inline PairFrequencyMatrix random_matrix(std::mt19937_64& rng, std::size_t k, std::uint64_t db_size) {
  std::uniform_int_distribution<std::uint64_t> c(0, db_size);
  std::vector<std::uint64_t> counts(pair_count_for(k));
  for (auto& x : counts) x = c(rng);
  return PairFrequencyMatrix(k, db_size, std::move(counts));
}

inline ThresholdGraph random_graph(std::mt19937_64& rng, std::size_t k, double density) {
  std::bernoulli_distribution edge(density);
  ThresholdGraph g(k, Threshold{});
  for (ItemId i = 0; i < k; ++i)
    for (ItemId j = i + 1; j < k; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

/// Adjacency as bit masks (k <= 32).
inline std::vector<std::uint32_t> adjacency_masks(const ThresholdGraph& g) {
  std::vector<std::uint32_t> masks(g.k(), 0);
  for (ItemId i = 0; i < g.k(); ++i)
    for (ItemId j = 0; j < g.k(); ++j)
      if (i != j && g.adjacent(i, j)) masks[i] |= 1u << j;
  return masks;
}

/// Exhaustive subset DP: clique[mask] = clique[mask minus low bit] and the low
/// bit is adjacent to the rest. Returns every maximum clique as a mask.
struct BruteClique {
  std::size_t size = 0;
  std::vector<std::uint32_t> maximum;
};

inline BruteClique brute_max_clique(const ThresholdGraph& g) {
  const auto k = g.k();
  const auto adj = adjacency_masks(g);
  std::vector<std::uint8_t> clique(std::size_t{1} << k, 0);
  clique[0] = 1;
  BruteClique out;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(mask));
    const auto rest = mask & (mask - 1);
    clique[mask] = clique[rest] && (adj[low] & rest) == rest;
    if (!clique[mask]) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > out.size) {
      out.size = size;
      out.maximum.clear();
    }
    if (size == out.size) out.maximum.push_back(mask);
  }
  return out;
}

inline ItemSet mask_to_set(std::uint32_t mask) {
  ItemSet s;
  for (ItemId v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) s.push_back(v);
  return s;
}

/// Every QUBO minimiser by Gray-code enumeration with incremental energy.
struct BruteQubo {
  std::int64_t min_energy = 0;
  std::vector<std::uint32_t> minimisers;
};

inline BruteQubo brute_qubo(const QMatrix& q) {
  const auto k = q.k();
  BruteQubo out;
  out.minimisers.push_back(0);
  std::uint32_t x = 0;
  std::int64_t e = 0;
  for (std::uint32_t step = 1; step < (1u << k); ++step) {
    const auto bit = static_cast<ItemId>(std::countr_zero(step));
    const bool turning_on = !((x >> bit) & 1u);
    std::int64_t delta = q.at(bit, bit);
    for (ItemId j = 0; j < k; ++j)
      if (j != bit && ((x >> j) & 1u)) delta += q.at(bit, j);
    e += turning_on ? delta : -delta;
    x ^= 1u << bit;
    if (e < out.min_energy) {
      out.min_energy = e;
      out.minimisers.clear();
    }
    if (e == out.min_energy) out.minimisers.push_back(x);
  }
  return out;
}

inline BitVector mask_to_bits(std::uint32_t mask, std::size_t k) {
  BitVector x(k);
  for (std::size_t i = 0; i < k; ++i) x.set(i, (mask >> i) & 1u);
  return x;
}

}  // namespace mfio::fixture

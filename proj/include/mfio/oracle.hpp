#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mfio/core_model.hpp"

namespace mfio {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Number of transactions containing every item of `items`.
/// SetTooSmall for an empty set; InvalidItem for unknown ids.
std::uint64_t frequency_of_set(const TransactionDb& db, std::span<const ItemId> items);

struct TopSets {
  std::uint64_t max_count = 0;
  /// Every n-set reaching max_count, lexicographically sorted.
  std::vector<ItemSet> maximizers;
};

/// Exact most frequent n-set by counting every n-subset of every transaction.
/// OracleBudgetExceeded when the candidate total exceeds `budget`. Returns
/// (0, {}) when no transaction holds n items.
TopSets most_frequent_nset_exact(const TransactionDb& db, std::size_t n,
                                 std::uint64_t budget = kDefaultOracleBudget);

/// Same answer restricted to n-sets occurring at least `floor` times (n >= 2).
/// Such a set has every pair count >= floor, so each transaction only
/// contributes the n-subsets whose pairs all clear the bound. With the
/// frequency of any known n-set as `floor` the result equals
/// most_frequent_nset_exact. Returns (0, {}) when nothing reaches `floor`.
/// DimensionMismatch if `matrix` was not counted from `db`.
TopSets most_frequent_nset_at_least(const TransactionDb& db, const PairFrequencyMatrix& matrix, std::size_t n,
                                    std::uint64_t floor, std::uint64_t budget = kDefaultOracleBudget);

struct ObjectiveOptimum {
  std::uint64_t best_min_pair_count = 0;
  std::vector<ItemSet> maximizers;
};

/// Exhaustive max over all C(k, n) sets of the minimum pairwise count.
/// OracleBudgetExceeded when C(k, n) > budget.
ObjectiveOptimum objective_bruteforce(const PairFrequencyMatrix& matrix, std::size_t n,
                                      std::uint64_t budget = kDefaultOracleBudget);

/// C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace mfio

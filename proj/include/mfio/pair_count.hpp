#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include "mfio/core_model.hpp"

namespace mfio {

struct CountOptions {
  /// Largest accepted k(k-1)/2; bigger catalogs are rejected up front.
  std::uint64_t max_entries = std::uint64_t{1} << 31;
  /// 0 lets OpenMP decide.
  int threads = 0;
};

/// Running triangular accumulator; add() one transaction at a time.
class PairCountAccumulator {
 public:
  explicit PairCountAccumulator(std::size_t k, std::uint64_t max_entries = CountOptions{}.max_entries);

  /// `tx` must be strictly increasing with ids < k.
  void add(std::span<const ItemId> tx);
  /// Elementwise addition of another accumulator over the same k.
  void merge(const PairCountAccumulator& other);

  std::size_t k() const noexcept { return k_; }
  std::uint64_t transactions() const noexcept { return transactions_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  /// EmptyDatabase if nothing was added.
  PairFrequencyMatrix finish() const&;
  PairFrequencyMatrix finish() &&;

 private:
  std::size_t k_;
  std::uint64_t transactions_ = 0;
  std::vector<std::uint64_t> counts_;
};

/// Data-parallel pass over transaction chunks; bit-identical to the serial pass.
PairFrequencyMatrix count_pairs(const TransactionDb& db, const CountOptions& options = {});
/// Single-threaded reference.
PairFrequencyMatrix count_pairs_serial(const TransactionDb& db, const CountOptions& options = {});

struct MinPairFrequency {
  std::uint64_t count = 0;
  double relative = 0.0;
};

/// Minimum pair count over all 2-subsets of `items` (order-insensitive).
/// SetTooSmall when fewer than two distinct items are given.
MinPairFrequency min_pair_frequency(const PairFrequencyMatrix& matrix, std::span<const ItemId> items);

/// CSV "i,j,count,rel" with one row per pair with a nonzero count.
void write_matrix_csv(const PairFrequencyMatrix& matrix, std::ostream& out);

}  // namespace mfio

#include "mfio/pair_count.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace mfio {

namespace {

void check_entry_budget(std::size_t k, std::uint64_t max_entries) {
  const auto entries = static_cast<unsigned __int128>(k) * (k > 0 ? k - 1 : 0) / 2;
  if (entries > max_entries)
    throw Error(Errc::BudgetExceeded, "catalog of " + std::to_string(k) + " items needs more than " +
                                          std::to_string(max_entries) + " pair entries");
}

// Pair (a,b), a < b, lives at row_offset[a] + (b - a - 1).
std::vector<std::size_t> row_offsets(std::size_t k) {
  std::vector<std::size_t> offsets(k);
  for (std::size_t a = 0; a < k; ++a) offsets[a] = a * (2 * k - a - 1) / 2;
  return offsets;
}

inline void accumulate(std::span<const ItemId> tx, const std::vector<std::size_t>& offsets,
                       std::uint64_t* counts) {
  for (std::size_t p = 0; p + 1 < tx.size(); ++p) {
    const std::size_t base = offsets[tx[p]] - tx[p] - 1;
    for (std::size_t q = p + 1; q < tx.size(); ++q) ++counts[base + tx[q]];
  }
}

}  // namespace

PairCountAccumulator::PairCountAccumulator(std::size_t k, std::uint64_t max_entries) : k_(k) {
  check_entry_budget(k, max_entries);
  counts_.assign(pair_count_for(k), 0);
}

void PairCountAccumulator::add(std::span<const ItemId> tx) {
  for (std::size_t p = 0; p < tx.size(); ++p) {
    if (tx[p] >= k_) throw Error(Errc::InvalidItem, "item id out of range");
    if (p > 0 && tx[p - 1] >= tx[p]) throw Error(Errc::InvalidArgument, "transaction not strictly increasing");
  }
  for (std::size_t p = 0; p + 1 < tx.size(); ++p)
    for (std::size_t q = p + 1; q < tx.size(); ++q) ++counts_[pair_index(tx[p], tx[q], k_)];
  ++transactions_;
}

void PairCountAccumulator::merge(const PairCountAccumulator& other) {
  if (other.k_ != k_) throw Error(Errc::DimensionMismatch, "accumulators over different catalogs");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] += other.counts_[e];
  transactions_ += other.transactions_;
}

PairFrequencyMatrix PairCountAccumulator::finish() const& {
  if (transactions_ == 0) throw Error(Errc::EmptyDatabase, "no transactions counted");
  return PairFrequencyMatrix(k_, transactions_, counts_);
}

PairFrequencyMatrix PairCountAccumulator::finish() && {
  if (transactions_ == 0) throw Error(Errc::EmptyDatabase, "no transactions counted");
  return PairFrequencyMatrix(k_, transactions_, std::move(counts_));
}

PairFrequencyMatrix count_pairs_serial(const TransactionDb& db, const CountOptions& options) {
  if (db.empty()) throw Error(Errc::EmptyDatabase, "cannot count pairs of an empty database");
  const auto k = db.item_count();
  check_entry_budget(k, options.max_entries);
  std::vector<std::uint64_t> counts(pair_count_for(k), 0);
  const auto offsets = row_offsets(k);
  for (const auto& tx : db.transactions()) accumulate(tx, offsets, counts.data());
  return PairFrequencyMatrix(k, db.size(), std::move(counts));
}

PairFrequencyMatrix count_pairs(const TransactionDb& db, const CountOptions& options) {
  if (db.empty()) throw Error(Errc::EmptyDatabase, "cannot count pairs of an empty database");
  const auto k = db.item_count();
  check_entry_budget(k, options.max_entries);
  const auto entries = pair_count_for(k);
  const auto offsets = row_offsets(k);
  const auto& txs = db.transactions();
  const auto n = static_cast<std::int64_t>(txs.size());

  int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  // Per-thread triangles only pay off when there is work to split.
  if (threads <= 1 || n < 1024) return count_pairs_serial(db, options);

  std::vector<std::uint64_t> counts(entries, 0);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    auto& local = partial[static_cast<std::size_t>(tid)];
    local.assign(entries, 0);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) accumulate(txs[static_cast<std::size_t>(t)], offsets, local.data());

    // Merge by disjoint slices of the triangle; integer addition is exact
    // so the result does not depend on thread interleaving.
#pragma omp for schedule(static)
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(entries); ++e) {
      std::uint64_t sum = 0;
      for (const auto& part : partial) sum += part[static_cast<std::size_t>(e)];
      counts[static_cast<std::size_t>(e)] = sum;
    }
  }
  return PairFrequencyMatrix(k, db.size(), std::move(counts));
}

MinPairFrequency min_pair_frequency(const PairFrequencyMatrix& matrix, std::span<const ItemId> items) {
  ItemSet sorted(items.begin(), items.end());
  normalize_itemset(sorted);
  if (sorted.size() < 2) throw Error(Errc::SetTooSmall, "min pair frequency needs at least two items");
  std::uint64_t best = matrix.db_size();
  for (std::size_t p = 0; p + 1 < sorted.size(); ++p)
    for (std::size_t q = p + 1; q < sorted.size(); ++q) best = std::min(best, matrix.count(sorted[p], sorted[q]));
  return {best, static_cast<double>(best) / static_cast<double>(matrix.db_size())};
}

void write_matrix_csv(const PairFrequencyMatrix& matrix, std::ostream& out) {
  out << "i,j,count,rel\n";
  const auto k = matrix.k();
  char rel[32];
  for (ItemId i = 0; i < k; ++i) {
    for (ItemId j = i + 1; j < k; ++j) {
      const auto c = matrix.count(i, j);
      if (c == 0) continue;
      std::snprintf(rel, sizeof rel, "%.17g", matrix.rel(i, j));
      out << i << ',' << j << ',' << c << ',' << rel << '\n';
    }
  }
}

}  // namespace mfio

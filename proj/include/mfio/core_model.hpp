#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mfio/errors.hpp"

namespace mfio {

using ItemId = std::uint32_t;
/// Sorted, duplicate-free list of item ids.
using ItemSet = std::vector<ItemId>;

/// Interned item tokens. Ids are dense and follow first-insertion order.
class ItemCatalog {
 public:
  /// Returns the id of `token` (trimmed), appending it if unseen.
  ItemId intern(std::string_view token);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ItemId id) const;
  /// Id of a known token; InvalidItem when absent.
  ItemId lookup(std::string_view token) const;
  bool contains(std::string_view token) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> index_;
};

/// Sorts and deduplicates ids in place.
void normalize_itemset(ItemSet& items);

class TransactionDb {
 public:
  TransactionDb() = default;
  /// Validates that every transaction is strictly increasing and in range.
  TransactionDb(ItemCatalog catalog, std::vector<ItemSet> transactions);

  /// Interns tokens in first-seen order; each list is deduplicated.
  static TransactionDb from_token_lists(const std::vector<std::vector<std::string>>& lists);

  const ItemCatalog& catalog() const noexcept { return catalog_; }
  const std::vector<ItemSet>& transactions() const noexcept { return transactions_; }
  std::size_t size() const noexcept { return transactions_.size(); }
  std::size_t item_count() const noexcept { return catalog_.size(); }
  bool empty() const noexcept { return transactions_.empty(); }

  std::vector<std::string> tokens_of(std::span<const ItemId> items) const;
  /// Maps tokens to ids and normalizes; InvalidItem for unknown tokens.
  ItemSet ids_of(const std::vector<std::string>& tokens) const;

 private:
  ItemCatalog catalog_;
  std::vector<ItemSet> transactions_;
};

/// A relative-frequency threshold held as an exact fraction num/den.
///
/// The bisection only ever produces dyadic values p/2^q, but fixtures such
/// as t = 3/7 are ordinary fractions, so the denominator is general.
struct Threshold {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// InvalidThreshold unless den > 0 and 0 <= num/den <= 1.
  static Threshold make(std::uint64_t num, std::uint64_t den);
  static Threshold dyadic(std::uint64_t num, unsigned log2_den);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  /// True iff count/db_size >= num/den, evaluated in 128-bit integers.
  bool admits(std::uint64_t count, std::uint64_t db_size) const noexcept {
    return static_cast<unsigned __int128>(count) * den >=
           static_cast<unsigned __int128>(num) * db_size;
  }

  friend bool operator==(const Threshold& a, const Threshold& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<(const Threshold& a, const Threshold& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<=(const Threshold& a, const Threshold& b) noexcept { return !(b < a); }
};

std::string to_string(const Threshold& t);

/// Flat index of the unordered pair {i, j} in a strict upper triangle over
/// k items. InvalidPair when i == j or either id is >= k.
std::size_t pair_index(ItemId i, ItemId j, std::size_t k);

/// k(k-1)/2
constexpr std::size_t pair_count_for(std::size_t k) noexcept {
  return k < 2 ? 0 : k * (k - 1) / 2;
}

/// Co-occurrence counts of every 2-set. Storage depends on k only.
class PairFrequencyMatrix {
 public:
  /// EmptyDatabase when db_size == 0; InvalidArgument when `counts` has the
  /// wrong length or an entry exceeds db_size.
  PairFrequencyMatrix(std::size_t k, std::uint64_t db_size, std::vector<std::uint64_t> counts);

  std::size_t k() const noexcept { return k_; }
  std::uint64_t db_size() const noexcept { return db_size_; }
  std::size_t entry_count() const noexcept { return counts_.size(); }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  std::uint64_t count(ItemId i, ItemId j) const { return counts_[pair_index(i, j, k_)]; }
  double rel(ItemId i, ItemId j) const {
    return static_cast<double>(count(i, j)) / static_cast<double>(db_size_);
  }
  /// rel(i, j) >= t, exact.
  bool admits(ItemId i, ItemId j, const Threshold& t) const { return t.admits(count(i, j), db_size_); }

  friend bool operator==(const PairFrequencyMatrix&, const PairFrequencyMatrix&) = default;

 private:
  std::size_t k_;
  std::uint64_t db_size_;
  std::vector<std::uint64_t> counts_;
};

struct TraceEntry {
  int iteration = 0;
  Threshold t;
  std::size_t clique_size = 0;
  bool success = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct MineOutcome {
  ItemSet itemset;
  ItemSet clique;
  Threshold t_best;
  std::vector<TraceEntry> trace;
  std::string solver;
};

}  // namespace mfio

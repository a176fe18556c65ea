#include "mfio/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mfio {

namespace {

using u128 = unsigned __int128;
constexpr u128 kU128Max = ~u128{0};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// binom[c * (n + 1) + i] = C(c, i) for c <= k, i <= n; throws when C(k, n)
// itself does not fit, since colex ranks go up to C(k, n) - 1.
std::vector<u128> binomial_table(std::size_t k, std::size_t n) {
  std::vector<u128> table((k + 1) * (n + 1), 0);
  auto at = [&](std::size_t c, std::size_t i) -> u128& { return table[c * (n + 1) + i]; };
  for (std::size_t c = 0; c <= k; ++c) {
    at(c, 0) = 1;
    for (std::size_t i = 1; i <= std::min(c, n); ++i) {
      const u128 a = at(c - 1, i - 1);
      const u128 b = i <= c - 1 ? at(c - 1, i) : 0;
      if (a > kU128Max - b) throw Error(Errc::OracleBudgetExceeded, "subset ranks overflow 128 bits");
      at(c, i) = a + b;
    }
  }
  return table;
}

}  // namespace

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t frequency_of_set(const TransactionDb& db, std::span<const ItemId> items) {
  if (items.empty()) throw Error(Errc::SetTooSmall, "frequency of the empty set is undefined here");
  ItemSet sorted(items.begin(), items.end());
  normalize_itemset(sorted);
  if (sorted.back() >= db.item_count()) throw Error(Errc::InvalidItem, "item id out of range");
  std::uint64_t count = 0;
  for (const auto& tx : db.transactions())
    if (std::includes(tx.begin(), tx.end(), sorted.begin(), sorted.end())) ++count;
  return count;
}

namespace {

// Counts colex-ranked candidates and unranks the most frequent ones.
TopSets tally(std::vector<u128>& ranks, std::size_t k, std::size_t n, const std::vector<u128>& binom,
              std::uint64_t floor) {
  auto choose = [&](std::size_t c, std::size_t i) { return binom[c * (n + 1) + i]; };
  std::sort(ranks.begin(), ranks.end());
  TopSets out;
  std::vector<u128> best;
  for (std::size_t lo = 0; lo < ranks.size();) {
    std::size_t hi = lo;
    while (hi < ranks.size() && ranks[hi] == ranks[lo]) ++hi;
    const auto run = static_cast<std::uint64_t>(hi - lo);
    if (run > out.max_count) {
      out.max_count = run;
      best.clear();
    }
    if (run == out.max_count) best.push_back(ranks[lo]);
    lo = hi;
  }
  if (out.max_count < floor) return {};

  for (auto rank : best) {
    ItemSet set(n);
    std::size_t c = k;
    for (std::size_t i = n; i > 0; --i) {
      while (choose(c, i) > rank) --c;
      set[i - 1] = static_cast<ItemId>(c);
      rank -= choose(c, i);
    }
    out.maximizers.push_back(std::move(set));
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  return out;
}

[[noreturn]] void over_budget(std::uint64_t seen, std::size_t n, std::uint64_t budget) {
  throw Error(Errc::OracleBudgetExceeded, std::to_string(seen) + " candidate " + std::to_string(n) +
                                              "-sets exceed the budget of " + std::to_string(budget));
}

}  // namespace

TopSets most_frequent_nset_exact(const TransactionDb& db, std::size_t n, std::uint64_t budget) {
  if (n == 0) throw Error(Errc::SetTooSmall, "n must be at least 1");
  std::uint64_t total = 0;
  for (const auto& tx : db.transactions()) total = saturating_add(total, binomial_saturating(tx.size(), n));
  if (total > budget) over_budget(total, n, budget);
  if (total == 0) return {};

  const auto k = db.item_count();
  const auto binom = binomial_table(k, n);
  auto choose = [&](std::size_t c, std::size_t i) { return binom[c * (n + 1) + i]; };

  // Colex rank of a sorted subset: sum of C(item_i, i + 1).
  std::vector<u128> ranks;
  ranks.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> pick(n);
  for (const auto& tx : db.transactions()) {
    const auto m = tx.size();
    if (m < n) continue;
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
      u128 rank = 0;
      for (std::size_t i = 0; i < n; ++i) rank += choose(tx[pick[i]], i + 1);
      ranks.push_back(rank);
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return tally(ranks, k, n, binom, 0);
}

TopSets most_frequent_nset_at_least(const TransactionDb& db, const PairFrequencyMatrix& matrix, std::size_t n,
                                    std::uint64_t floor, std::uint64_t budget) {
  if (n < 2) throw Error(Errc::SetTooSmall, "the pair filter needs n >= 2");
  const auto k = db.item_count();
  if (matrix.k() != k || matrix.db_size() != db.size())
    throw Error(Errc::DimensionMismatch, "pair matrix does not belong to this database");
  if (n > k) return {};

  const auto binom = binomial_table(k, n);
  auto choose = [&](std::size_t c, std::size_t i) { return binom[c * (n + 1) + i]; };

  std::vector<u128> ranks;
  std::vector<std::uint8_t> ok;
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  for (const auto& tx : db.transactions()) {
    const auto m = tx.size();
    if (m < n) continue;
    ok.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) ok[a * m + b] = matrix.count(tx[a], tx[b]) >= floor;

    // Depth-first over the n-cliques of this transaction under the pair bound.
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() == n) {
        if (ranks.size() >= budget) over_budget(ranks.size() + 1, n, budget);
        u128 rank = 0;
        for (std::size_t i = 0; i < n; ++i) rank += choose(tx[chosen[i]], i + 1);
        ranks.push_back(rank);
        return;
      }
      for (std::size_t v = from; v + (n - chosen.size()) <= m; ++v) {
        bool fits = true;
        for (auto u : chosen)
          if (!ok[u * m + v]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        chosen.push_back(v);
        self(self, v + 1);
        chosen.pop_back();
      }
    };
    extend(extend, 0);
  }
  return tally(ranks, k, n, binom, floor);
}

ObjectiveOptimum objective_bruteforce(const PairFrequencyMatrix& matrix, std::size_t n, std::uint64_t budget) {
  if (n < 2) throw Error(Errc::SetTooSmall, "the pair objective needs n >= 2");
  const auto k = matrix.k();
  if (n > k) throw Error(Errc::NTooLarge, "n exceeds the item count");
  const auto sets = binomial_saturating(k, n);
  if (sets > budget)
    throw Error(Errc::OracleBudgetExceeded, "C(" + std::to_string(k) + "," + std::to_string(n) +
                                                ") exceeds the budget of " + std::to_string(budget));

  ObjectiveOptimum out;
  bool have = false;
  ItemSet chosen;
  chosen.reserve(n);
  // prefix_min[d] is the minimum pair count among chosen[0..d).
  std::vector<std::uint64_t> prefix_min(n + 1, matrix.db_size());

  auto visit = [&](auto&& self, ItemId from) -> void {
    const auto depth = chosen.size();
    if (depth == n) {
      const auto value = prefix_min[n];
      if (!have || value > out.best_min_pair_count) {
        have = true;
        out.best_min_pair_count = value;
        out.maximizers.clear();
      }
      if (value == out.best_min_pair_count) out.maximizers.push_back(chosen);
      return;
    }
    for (ItemId v = from; v + (n - depth) <= k; ++v) {
      std::uint64_t m = prefix_min[depth];
      for (auto u : chosen) m = std::min(m, matrix.count(u, v));
      prefix_min[depth + 1] = m;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

}  // namespace mfio

#include <gtest/gtest.h>

#include <random>
#include <numeric>
#include <set>

#include "mfio/mine.hpp"
#include "mfio/oracle.hpp"
#include "mfio/pair_count.hpp"
#include "support.hpp"

using namespace mfio;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

/// Independent reference: test every n-subset of the catalog against every row.
TopSets top_sets_naive(const TransactionDb& db, std::size_t n) {
  TopSets best;
  const auto k = db.item_count();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
    const auto set = fixture::mask_to_set(mask);
    std::uint64_t c = 0;
    for (const auto& tx : db.transactions()) c += std::includes(tx.begin(), tx.end(), set.begin(), set.end());
    if (c == 0) continue;
    if (c > best.max_count) best = {c, {}};
    if (c == best.max_count) best.maximizers.push_back(set);
  }
  std::sort(best.maximizers.begin(), best.maximizers.end());
  return best;
}

}  // namespace

TEST(FrequencyOfSet, OverlayExample) {
  const auto db = fixture::overlay_db();
  EXPECT_EQ(frequency_of_set(db, fixture::ids(db, {"1", "2", "4"})), 2u);
  EXPECT_EQ(frequency_of_set(db, fixture::ids(db, {"1", "2", "3"})), 1u);
  EXPECT_EQ(frequency_of_set(db, fixture::ids(db, {"1"})), 5u);
  EXPECT_EQ(error_of([&] { (void)frequency_of_set(db, ItemSet{}); }), Errc::SetTooSmall);
  EXPECT_EQ(error_of([&] { (void)frequency_of_set(db, ItemSet{0, 9}); }), Errc::InvalidItem);
}

TEST(MostFrequentNsetExact, OverlayExample) {
  const auto db = fixture::overlay_db();
  const auto top = most_frequent_nset_exact(db, 3);
  EXPECT_EQ(top.max_count, 2u);
  ASSERT_EQ(top.maximizers.size(), 1u);
  EXPECT_EQ(db.tokens_of(top.maximizers[0]), (std::vector<std::string>{"1", "2", "4"}));
}

TEST(MostFrequentNsetExact, NoTransactionLongEnough) {
  std::istringstream in("a b\nc\n");
  const auto top = most_frequent_nset_exact(parse_item_lines(in), 3);
  EXPECT_EQ(top.max_count, 0u);
  EXPECT_TRUE(top.maximizers.empty());
}

TEST(MostFrequentNsetExact, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    const std::size_t k = 5 + static_cast<std::size_t>(round) % 8;
    const auto db = fixture::random_db(rng, k, 30);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto got = most_frequent_nset_exact(db, n);
      const auto want = top_sets_naive(db, n);
      ASSERT_EQ(got.max_count, want.max_count);
      ASSERT_EQ(got.maximizers, want.maximizers);
    }
  }
}

TEST(MostFrequentNsetExact, BudgetAndArgumentErrors) {
  const auto db = fixture::overlay_db();
  EXPECT_EQ(error_of([&] { (void)most_frequent_nset_exact(db, 2, 5); }), Errc::OracleBudgetExceeded);
  EXPECT_EQ(error_of([&] { (void)most_frequent_nset_exact(db, 0); }), Errc::SetTooSmall);
}

TEST(ObjectiveBruteforce, OverlayExample) {
  const auto db = fixture::overlay_db();
  const auto best = objective_bruteforce(count_pairs(db), 3);
  EXPECT_EQ(best.best_min_pair_count, 3u);
  ASSERT_EQ(best.maximizers.size(), 1u);
  EXPECT_EQ(db.tokens_of(best.maximizers[0]), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(ObjectiveBruteforce, AllEqualCountsMakeEverySetOptimal) {
  PairFrequencyMatrix m(7, 9, std::vector<std::uint64_t>(pair_count_for(7), 4));
  const auto best = objective_bruteforce(m, 3);
  EXPECT_EQ(best.best_min_pair_count, 4u);
  EXPECT_EQ(best.maximizers.size(), binomial_saturating(7, 3));
  EXPECT_TRUE(std::is_sorted(best.maximizers.begin(), best.maximizers.end()));
}

TEST(ObjectiveBruteforce, Errors) {
  const auto m = count_pairs(fixture::overlay_db());
  EXPECT_EQ(error_of([&] { (void)objective_bruteforce(m, 1); }), Errc::SetTooSmall);
  EXPECT_EQ(error_of([&] { (void)objective_bruteforce(m, 5); }), Errc::NTooLarge);
  EXPECT_EQ(error_of([&] { (void)objective_bruteforce(m, 2, 5); }), Errc::OracleBudgetExceeded);
}

TEST(ObjectiveBruteforce, MinedSetAttainsOptimumUpToResolution) {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 40; ++round) {
    const auto db = fixture::random_db(rng, 10, 64);
    const auto m = count_pairs(db);
    const auto best = objective_bruteforce(m, 3);
    const auto out = mine(m, 3, 12, ExactCliqueSolver{});
    // db_size 64 divides 2^12, so the bisection is exact.
    ASSERT_EQ(min_pair_frequency(m, out.itemset).count, best.best_min_pair_count);
    ASSERT_NE(std::find(best.maximizers.begin(), best.maximizers.end(), out.itemset), best.maximizers.end());
  }
}

TEST(BinomialSaturating, Values) {
  EXPECT_EQ(binomial_saturating(250, 2), 31'125u);
  EXPECT_EQ(binomial_saturating(5, 0), 1u);
  EXPECT_EQ(binomial_saturating(3, 5), 0u);
  EXPECT_EQ(binomial_saturating(200, 100), UINT64_MAX);
  EXPECT_EQ(binomial_saturating(62, 31), 465'428'353'255'261'088u);
}

TEST(MostFrequentNsetAtLeast, AgreesWithFullEnumeration) {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 60; ++round) {
    const auto db = fixture::random_db(rng, 9, 40);
    const auto m = count_pairs(db);
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto full = most_frequent_nset_exact(db, n);
      // The floor can be any attained frequency at or below the maximum.
      ItemSet probe(n);
      std::iota(probe.begin(), probe.end(), ItemId{0});
      const auto floor = std::max<std::uint64_t>(1, frequency_of_set(db, probe));
      const auto pruned = most_frequent_nset_at_least(db, m, n, floor);
      if (full.max_count < floor) {
        ASSERT_EQ(pruned.max_count, 0u);
        continue;
      }
      ASSERT_EQ(pruned.max_count, full.max_count);
      ASSERT_EQ(pruned.maximizers, full.maximizers);
    }
  }
}

TEST(MostFrequentNsetAtLeast, FloorAboveMaximumGivesNothing) {
  const auto db = fixture::overlay_db();
  const auto m = count_pairs(db);
  EXPECT_EQ(most_frequent_nset_at_least(db, m, 3, 2).max_count, 2u);
  const auto none = most_frequent_nset_at_least(db, m, 3, 3);
  EXPECT_EQ(none.max_count, 0u);
  EXPECT_TRUE(none.maximizers.empty());
  EXPECT_EQ(error_of([&] { (void)most_frequent_nset_at_least(db, m, 3, 1, 2); }), Errc::OracleBudgetExceeded);
  EXPECT_EQ(error_of([&] { (void)most_frequent_nset_at_least(db, PairFrequencyMatrix(4, 8, std::vector<std::uint64_t>(6, 0)), 3, 1); }),
            Errc::DimensionMismatch);
}

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mfio/pair_count.hpp"
#include "mfio/qubo.hpp"
#include "support.hpp"

using namespace mfio;

namespace {

AnnealParams quick(std::uint64_t seed) {
  AnnealParams p;
  p.restarts = 8;
  p.sweeps = 300;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(BuildQubo, ZeroThresholdHasOnlyDiagonal) {
  std::mt19937_64 rng(1);
  const auto m = fixture::random_matrix(rng, 6, 10);
  const auto q = build_qubo(m, Threshold::make(0, 1));
  for (ItemId i = 0; i < 6; ++i)
    for (ItemId j = i; j < 6; ++j) EXPECT_EQ(q.at(i, j), i == j ? -1 : 0);
}

TEST(BuildQubo, OverlayPenaltyOnInfrequentPair) {
  const auto db = fixture::overlay_db();
  const auto q = build_qubo(count_pairs(db), Threshold::make(3, 7));
  const auto one = db.catalog().lookup("1"), four = db.catalog().lookup("4");
  EXPECT_EQ(q.at(one, four), 5);
  EXPECT_EQ(q.at(four, one), 5);
  EXPECT_EQ(q.at(one, db.catalog().lookup("2")), 0);
  EXPECT_EQ(q.at(one, one), -1);
}

TEST(QMatrix, TriangularStorageSize) {
  EXPECT_EQ(QMatrix(250).storage_size(), 31'375u);
  EXPECT_EQ(QMatrix(1).storage_size(), 1u);
  QMatrix q(3);
  EXPECT_THROW((void)q.at(0, 3), Error);
}

TEST(QMatrix, EveryCellHasItsOwnSlot) {
  QMatrix q(9);
  std::int64_t v = 1;
  for (ItemId i = 0; i < 9; ++i)
    for (ItemId j = i; j < 9; ++j) q.set(i, j, v++);
  v = 1;
  for (ItemId i = 0; i < 9; ++i)
    for (ItemId j = i; j < 9; ++j) ASSERT_EQ(q.at(j, i), v++);
}

TEST(QuboEnergy, HandValues) {
  QMatrix q(2);
  q.set(0, 0, -1);
  q.set(1, 1, -1);
  q.set(0, 1, 3);
  EXPECT_EQ(qubo_energy(q, BitVector::from_string("00")), 0);
  EXPECT_EQ(qubo_energy(q, BitVector::from_string("10")), -1);
  EXPECT_EQ(qubo_energy(q, BitVector::from_string("11")), 1);
  EXPECT_THROW((void)qubo_energy(q, BitVector(3)), Error);
}

TEST(QuboEnergy, CompleteGraphMinimumIsAllOnes) {
  ThresholdGraph g(4, Threshold{});
  for (ItemId i = 0; i < 4; ++i)
    for (ItemId j = i + 1; j < 4; ++j) g.add_edge(i, j);
  const auto q = build_qubo(g);
  EXPECT_EQ(qubo_energy(q, BitVector::from_string("1111")), -4);
  const auto x = solve_qubo_annealing(q, quick(3));
  EXPECT_EQ(x, BitVector::from_string("1111"));
}

TEST(QuboEnergy, EdgelessGraphPicksOneVertex) {
  const auto q = build_qubo(ThresholdGraph(5, Threshold{}));
  const auto x = solve_qubo_annealing(q, quick(4));
  EXPECT_EQ(x.ones(), 1u);
  EXPECT_EQ(qubo_energy(q, x), -1);
}

TEST(QuboAnnealing, OverlayExampleFindsTriangle) {
  const auto db = fixture::overlay_db();
  const auto q = build_qubo(count_pairs(db), Threshold::make(3, 7));
  const auto brute = fixture::brute_qubo(q);
  EXPECT_EQ(brute.min_energy, -3);
  ASSERT_EQ(brute.minimisers.size(), 1u);
  const auto x = solve_qubo_annealing(q, quick(7));
  EXPECT_EQ(qubo_energy(q, x), -3);
  EXPECT_EQ(db.tokens_of(decode_selection(x)), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(BitVector, StringRoundTripAndDecode) {
  const auto x = BitVector::from_string("0111");
  EXPECT_EQ(x.str(), "0111");
  EXPECT_EQ(x.ones(), 3u);
  EXPECT_EQ(decode_selection(x), (ItemSet{1, 2, 3}));
  EXPECT_THROW((void)BitVector::from_string("01x"), Error);
}

TEST(BuildQubo, MinimisersAreExactlyMaximumCliques) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  for (int round = 0; round < 100; ++round) {
    const auto g = fixture::random_graph(rng, size(rng), density(rng));
    const auto q = build_qubo(g);
    const auto clique = fixture::brute_max_clique(g);
    const auto qubo = fixture::brute_qubo(q);
    ASSERT_EQ(qubo.min_energy, -static_cast<std::int64_t>(clique.size));
    auto a = clique.maximum, b = qubo.minimisers;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b) << "round " << round;
  }
}

TEST(BuildQubo, MatrixAndGraphEncodingsAgree) {
  std::mt19937_64 rng(10);
  for (int round = 0; round < 20; ++round) {
    const auto m = fixture::random_matrix(rng, 15, 33);
    const auto t = Threshold::make(round % 34, 33);
    EXPECT_EQ(build_qubo(m, t), build_qubo(threshold_graph(m, t)));
  }
}

TEST(RepairSelection, ProducesCliqueWithoutRaisingEnergy) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int round = 0; round < 200; ++round) {
    const auto g = fixture::random_graph(rng, 14, 0.5);
    const auto q = build_qubo(g);
    BitVector x(14);
    for (std::size_t i = 0; i < 14; ++i) x.set(i, coin(rng));
    const auto fixed = repair_selection(q, x);
    ASSERT_TRUE(is_clique(g, decode_selection(fixed)));
    ASSERT_LE(qubo_energy(q, fixed), qubo_energy(q, x));
    for (std::size_t i = 0; i < 14; ++i) ASSERT_TRUE(!fixed[i] || x[i]);
  }
}

TEST(RepairSelection, DropsMostConflictedThenLargestId) {
  // Vertex 2 conflicts with both 0 and 1; removing it leaves the edge {0, 1}.
  const std::vector<std::pair<ItemId, ItemId>> edges{{0, 1}};
  const auto q = build_qubo(ThresholdGraph::from_edges(3, edges));
  EXPECT_EQ(repair_selection(q, BitVector::from_string("111")), BitVector::from_string("110"));
  // Two isolated vertices tie; the larger id goes.
  EXPECT_EQ(repair_selection(q, BitVector::from_string("101")), BitVector::from_string("100"));
}

TEST(QuboAnnealing, DeterministicAndParallelMatchesSerial) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 10; ++round) {
    const auto q = build_qubo(fixture::random_graph(rng, 40, 0.6));
    const auto p = quick(100 + static_cast<std::uint64_t>(round));
    const auto a = solve_qubo_annealing(q, p);
    EXPECT_EQ(a, solve_qubo_annealing(q, p));
    EXPECT_EQ(a, solve_qubo_annealing_serial(q, p));
  }
}

TEST(QuboAnnealing, RejectsBadParameters) {
  const QMatrix q(3);
  auto p = quick(0);
  p.restarts = 0;
  EXPECT_THROW((void)solve_qubo_annealing(q, p), Error);
  p = quick(0);
  p.initial_temperature = 0.01;
  EXPECT_THROW((void)solve_qubo_annealing(q, p), Error);
  p = quick(0);
  p.final_temperature = 0.0;
  EXPECT_THROW((void)solve_qubo_annealing(q, p), Error);
}

TEST(QuboCliqueSolver, AlwaysReturnsClique) {
  std::mt19937_64 rng(13);
  QuboCliqueSolver solver(quick(5));
  EXPECT_FALSE(solver.exact());
  EXPECT_EQ(solver.name(), "qubo");
  for (int round = 0; round < 30; ++round) {
    const auto g = fixture::random_graph(rng, 25, 0.5);
    EXPECT_TRUE(is_clique(g, solver.solve(g).vertices));
  }
}

TEST(WriteQuboSparse, ListsUpperTriangleNonzeros) {
  const std::vector<std::pair<ItemId, ItemId>> edges{{0, 1}};
  std::ostringstream out;
  write_qubo_sparse(build_qubo(ThresholdGraph::from_edges(3, edges)), out);
  EXPECT_EQ(out.str(), "0 0 -1\n0 2 4\n1 1 -1\n1 2 4\n2 2 -1\n");
}

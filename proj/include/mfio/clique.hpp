#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfio/core_model.hpp"

namespace mfio {

/// Unweighted graph on k items keeping exactly the pairs with rel >= t.
/// Adjacency is stored as one bit row per vertex.
class ThresholdGraph {
 public:
  ThresholdGraph(std::size_t k, Threshold t);

  /// Arbitrary graph, mainly for tests. Self-loops and out-of-range ends
  /// raise InvalidVertex.
  static ThresholdGraph from_edges(std::size_t k, std::span<const std::pair<ItemId, ItemId>> edges,
                                   Threshold t = Threshold{});

  std::size_t k() const noexcept { return k_; }
  const Threshold& threshold() const noexcept { return t_; }
  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(ItemId v) const noexcept { return {bits_.data() + v * words_, words_}; }
  bool adjacent(ItemId i, ItemId j) const noexcept { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  std::size_t degree(ItemId v) const noexcept;
  std::size_t edge_count() const noexcept;

  void add_edge(ItemId i, ItemId j);

 private:
  friend ThresholdGraph threshold_graph(const PairFrequencyMatrix& matrix, const Threshold& t);

  std::size_t k_;
  std::size_t words_;
  Threshold t_;
  std::vector<std::uint64_t> bits_;
};

/// InvalidThreshold unless 0 <= t <= 1.
ThresholdGraph threshold_graph(const PairFrequencyMatrix& matrix, const Threshold& t);

struct CliqueResult {
  ItemSet vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

/// Pairwise adjacency check; sets of size <= 1 are cliques.
/// InvalidVertex for ids >= k.
bool is_clique(const ThresholdGraph& graph, std::span<const ItemId> vertices);

/// Backend contract for the bisection driver. Every solver must return a
/// clique; exact solvers additionally guarantee it is maximum.
class CliqueSolver {
 public:
  virtual ~CliqueSolver() = default;
  virtual CliqueResult solve(const ThresholdGraph& graph) const = 0;
  virtual bool exact() const noexcept = 0;
  virtual std::string name() const = 0;
};

struct ExactCliqueOptions {
  /// Search-node limit across one solve; BudgetExceeded beyond it.
  std::uint64_t max_nodes = 2'000'000'000;
};

/// Maximum clique, lexicographically smallest among ties.
/// EmptyGraph for k == 0.
CliqueResult max_clique_exact(const ThresholdGraph& graph, const ExactCliqueOptions& options = {});

class ExactCliqueSolver final : public CliqueSolver {
 public:
  explicit ExactCliqueSolver(ExactCliqueOptions options = {}) : options_(options) {}
  CliqueResult solve(const ThresholdGraph& graph) const override { return max_clique_exact(graph, options_); }
  bool exact() const noexcept override { return true; }
  std::string name() const override { return "exact"; }

 private:
  ExactCliqueOptions options_;
};

}  // namespace mfio

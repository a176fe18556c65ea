#include "mfio/mine.hpp"

#include <algorithm>
#include <string>

namespace mfio {

std::optional<SolverKind> parse_solver_kind(std::string_view name) {
  if (name == "exact") return SolverKind::Exact;
  if (name == "qubo") return SolverKind::Qubo;
  return std::nullopt;
}

std::string_view solver_name(SolverKind kind) { return kind == SolverKind::Exact ? "exact" : "qubo"; }

std::unique_ptr<CliqueSolver> make_solver(const MineRequest& request) {
  if (request.solver == SolverKind::Exact) return std::make_unique<ExactCliqueSolver>(request.exact);
  auto params = request.anneal;
  params.seed = request.seed;
  return std::make_unique<QuboCliqueSolver>(params);
}

ItemSet select_n_subset(std::span<const ItemId> clique, std::size_t n) {
  ItemSet sorted(clique.begin(), clique.end());
  normalize_itemset(sorted);
  if (sorted.size() < n)
    throw Error(Errc::SetTooSmall, "clique of size " + std::to_string(sorted.size()) + " has no " +
                                       std::to_string(n) + "-subset");
  sorted.resize(n);
  return sorted;
}

MineOutcome mine(const PairFrequencyMatrix& matrix, std::size_t n, int r, const CliqueSolver& solver) {
  if (n < 2) throw Error(Errc::InvalidArgument, "set size n must be at least 2");
  if (r < 1 || r > kMaxIterations)
    throw Error(Errc::InvalidArgument, "iteration count r must lie in [1, " + std::to_string(kMaxIterations) + "]");
  if (n > matrix.k())
    throw Error(Errc::NTooLarge, "n = " + std::to_string(n) + " exceeds the " + std::to_string(matrix.k()) +
                                     " available items");

  MineOutcome out;
  out.solver = solver.name();
  out.trace.reserve(static_cast<std::size_t>(r));
  std::optional<ItemSet> solution;

  // t = num / 2^i at iteration i.
  std::uint64_t num = 1;
  for (int i = 1; i <= r; ++i) {
    const auto t = Threshold::dyadic(num, static_cast<unsigned>(i));
    const auto graph = threshold_graph(matrix, t);
    auto clique = solver.solve(graph);
    const bool success = clique.size() >= n;
    out.trace.push_back(TraceEntry{i, t, clique.size(), success});
    if (success) {
      solution = std::move(clique.vertices);
      out.t_best = t;
    }
    num = 2 * num + (success ? 1 : -1);
  }

  if (!solution)
    throw NoCliqueFound("no probed threshold admits a clique of size " + std::to_string(n), std::move(out.trace));
  out.clique = std::move(*solution);
  out.itemset = select_n_subset(out.clique, n);
  return out;
}

MineOutcome mine(const PairFrequencyMatrix& matrix, const MineRequest& request) {
  const auto solver = make_solver(request);
  return mine(matrix, request.n, request.r, *solver);
}

}  // namespace mfio

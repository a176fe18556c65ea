#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "mfio/clique.hpp"
#include "mfio/core_model.hpp"
#include "mfio/qubo.hpp"

namespace mfio {

enum class SolverKind { Exact, Qubo };

std::optional<SolverKind> parse_solver_kind(std::string_view name);
std::string_view solver_name(SolverKind kind);

/// Largest R accepted; probes stay exact dyadic fractions below 2^62.
inline constexpr int kMaxIterations = 62;

struct MineRequest {
  std::size_t n = 2;
  int r = 10;
  SolverKind solver = SolverKind::Exact;
  std::uint64_t seed = 0;
  /// Used by the QUBO backend; its seed is replaced by `seed`.
  AnnealParams anneal{};
  ExactCliqueOptions exact{};
};

std::unique_ptr<CliqueSolver> make_solver(const MineRequest& request);

/// Raised when no probe reached a clique of size n; carries the full trace.
class NoCliqueFound : public Error {
 public:
  NoCliqueFound(const std::string& what, std::vector<TraceEntry> trace)
      : Error(Errc::NoCliqueFound, what), trace_(std::move(trace)) {}
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

 private:
  std::vector<TraceEntry> trace_;
};

/// The n smallest ids of `clique`, sorted. SetTooSmall when |clique| < n.
ItemSet select_n_subset(std::span<const ItemId> clique, std::size_t n);

/// R-step bisection on the threshold. Starts at t = 1/2; iteration i probes
/// Graph(t) and moves t up by 2^-(i+1) when a clique of at least n vertices
/// exists, down otherwise. The last successful clique is kept.
///
/// Reads nothing but the pair matrix. Errors: InvalidArgument for n < 2 or
/// r outside [1, kMaxIterations]; NTooLarge for n > k; NoCliqueFound.
MineOutcome mine(const PairFrequencyMatrix& matrix, std::size_t n, int r, const CliqueSolver& solver);
MineOutcome mine(const PairFrequencyMatrix& matrix, const MineRequest& request);

}  // namespace mfio

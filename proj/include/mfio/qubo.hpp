#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfio/clique.hpp"
#include "mfio/core_model.hpp"

namespace mfio {

/// Upper-triangular QUBO coefficients, diagonal included: k(k+1)/2 entries.
class QMatrix {
 public:
  explicit QMatrix(std::size_t k);

  std::size_t k() const noexcept { return k_; }
  std::size_t storage_size() const noexcept { return entries_.size(); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  /// Symmetric access; (i, j) and (j, i) name the same coefficient.
  std::int64_t at(ItemId i, ItemId j) const { return entries_[index(i, j)]; }
  void set(ItemId i, ItemId j, std::int64_t value) { entries_[index(i, j)] = value; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t index(ItemId i, ItemId j) const;

  std::size_t k_;
  std::vector<std::int64_t> entries_;
};

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t k) : bits_(k, 0) {}
  /// "0111" -> bits 1, 2, 3 set. InvalidArgument on other characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool on) noexcept { bits_[i] = on ? 1 : 0; }
  void flip(std::size_t i) noexcept { bits_[i] ^= 1; }
  std::size_t ones() const noexcept;
  std::string str() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Clique encoding of Graph(t): diagonal -1, penalty k+1 on every pair with
/// rel < t, 0 elsewhere. Uses the same exact comparison as threshold_graph.
QMatrix build_qubo(const PairFrequencyMatrix& matrix, const Threshold& t);
/// Same encoding read off an existing graph (penalty on every non-edge).
QMatrix build_qubo(const ThresholdGraph& graph);

/// sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j. DimensionMismatch on size mismatch.
std::int64_t qubo_energy(const QMatrix& q, const BitVector& x);

/// Sorted ids of the set bits.
ItemSet decode_selection(const BitVector& x);

struct AnnealParams {
  std::uint32_t restarts = 32;
  std::uint32_t sweeps = 2000;
  /// Defaults to k + 1 when unset.
  std::optional<double> initial_temperature;
  double final_temperature = 0.05;
  std::uint64_t seed = 0;

  double initial_for(std::size_t k) const {
    return initial_temperature.value_or(static_cast<double>(k) + 1.0);
  }
  /// InvalidArgument unless restarts, sweeps >= 1 and initial > final > 0.
  void validate(std::size_t k) const;
};

/// Drops selected variables joined by a positive coupling until none remain:
/// each round removes the one with most violations, the largest id on ties.
/// For the clique encoding the result decodes to a clique.
BitVector repair_selection(const QMatrix& q, BitVector x);

/// Restart-based single-flip Metropolis annealing with geometric cooling.
/// Restart r seeds its own generator with seed + r; each restart's best state
/// is repaired, and the lowest energy wins (lowest restart index on ties).
/// Restarts run on OpenMP threads; the result matches the serial version.
BitVector solve_qubo_annealing(const QMatrix& q, const AnnealParams& params);
BitVector solve_qubo_annealing_serial(const QMatrix& q, const AnnealParams& params);

/// Sparse text dump: one "i j value" line per nonzero, i <= j.
void write_qubo_sparse(const QMatrix& q, std::ostream& out);

/// Clique backend that answers max-clique queries by annealing the QUBO.
class QuboCliqueSolver final : public CliqueSolver {
 public:
  explicit QuboCliqueSolver(AnnealParams params = {}) : params_(params) {}
  CliqueResult solve(const ThresholdGraph& graph) const override;
  bool exact() const noexcept override { return false; }
  std::string name() const override { return "qubo"; }
  const AnnealParams& params() const noexcept { return params_; }

 private:
  AnnealParams params_;
};

}  // namespace mfio

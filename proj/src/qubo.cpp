#include "mfio/qubo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace mfio {

QMatrix::QMatrix(std::size_t k) : k_(k), entries_(k * (k + 1) / 2, 0) {}

std::size_t QMatrix::index(ItemId i, ItemId j) const {
  if (i >= k_ || j >= k_) throw Error(Errc::DimensionMismatch, "QUBO index out of range");
  if (i > j) std::swap(i, j);
  const std::size_t a = i;
  // Row a starts after rows 0..a-1, which hold k, k-1, ..., k-a+1 entries.
  return a * k_ - a * (a - 1) / 2 + (j - a);
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector x(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw Error(Errc::InvalidArgument, "bit string may hold only 0 and 1");
    x.set(i, bits[i] == '1');
  }
  return x;
}

std::size_t BitVector::ones() const noexcept {
  std::size_t n = 0;
  for (auto b : bits_) n += b;
  return n;
}

std::string BitVector::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

QMatrix build_qubo(const PairFrequencyMatrix& matrix, const Threshold& t) {
  const auto checked = Threshold::make(t.num, t.den);
  const auto k = matrix.k();
  const auto penalty = static_cast<std::int64_t>(k) + 1;
  QMatrix q(k);
  for (ItemId i = 0; i < k; ++i) {
    q.set(i, i, -1);
    for (ItemId j = i + 1; j < k; ++j)
      if (!matrix.admits(i, j, checked)) q.set(i, j, penalty);
  }
  return q;
}

QMatrix build_qubo(const ThresholdGraph& graph) {
  const auto k = graph.k();
  const auto penalty = static_cast<std::int64_t>(k) + 1;
  QMatrix q(k);
  for (ItemId i = 0; i < k; ++i) {
    q.set(i, i, -1);
    for (ItemId j = i + 1; j < k; ++j)
      if (!graph.adjacent(i, j)) q.set(i, j, penalty);
  }
  return q;
}

std::int64_t qubo_energy(const QMatrix& q, const BitVector& x) {
  if (x.size() != q.k())
    throw Error(Errc::DimensionMismatch, "bit vector of length " + std::to_string(x.size()) +
                                             " for QUBO of size " + std::to_string(q.k()));
  std::int64_t e = 0;
  const auto k = q.k();
  for (ItemId i = 0; i < k; ++i) {
    if (!x[i]) continue;
    e += q.at(i, i);
    for (ItemId j = i + 1; j < k; ++j)
      if (x[j]) e += q.at(i, j);
  }
  return e;
}

ItemSet decode_selection(const BitVector& x) {
  ItemSet out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<ItemId>(i));
  return out;
}

void AnnealParams::validate(std::size_t k) const {
  if (restarts == 0) throw Error(Errc::InvalidArgument, "annealing needs at least one restart");
  if (sweeps == 0) throw Error(Errc::InvalidArgument, "annealing needs at least one sweep");
  const double t0 = initial_for(k);
  if (!(final_temperature > 0.0) || !(t0 > final_temperature))
    throw Error(Errc::InvalidArgument, "temperatures must satisfy initial > final > 0");
}

BitVector repair_selection(const QMatrix& q, BitVector x) {
  if (x.size() != q.k()) throw Error(Errc::DimensionMismatch, "bit vector and QUBO sizes differ");
  const auto k = q.k();
  std::vector<std::size_t> violations(k);
  for (;;) {
    std::fill(violations.begin(), violations.end(), 0);
    std::size_t worst = 0;
    for (ItemId i = 0; i < k; ++i) {
      if (!x[i]) continue;
      for (ItemId j = i + 1; j < k; ++j) {
        if (x[j] && q.at(i, j) > 0) {
          ++violations[i];
          ++violations[j];
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, violations[i]);
    if (worst == 0) return x;
    for (std::size_t i = k; i-- > 0;) {
      if (violations[i] == worst) {
        x.set(i, false);
        break;
      }
    }
  }
}

namespace {

struct RestartResult {
  BitVector bits;
  std::int64_t energy = 0;
};

// Off-diagonal couplings per variable in compressed rows.
struct Couplings {
  std::vector<std::size_t> start;
  std::vector<ItemId> other;
  std::vector<std::int64_t> weight;
  std::vector<std::int64_t> diag;

  explicit Couplings(const QMatrix& q) {
    const auto k = q.k();
    start.assign(k + 1, 0);
    diag.resize(k);
    for (ItemId i = 0; i < k; ++i) {
      diag[i] = q.at(i, i);
      start[i] = other.size();
      for (ItemId j = 0; j < k; ++j) {
        if (j == i) continue;
        const auto w = q.at(i, j);
        if (w == 0) continue;
        other.push_back(j);
        weight.push_back(w);
      }
    }
    start[k] = other.size();
  }
};

RestartResult anneal_once(const QMatrix& q, const Couplings& c, const AnnealParams& params, std::uint32_t restart) {
  const auto k = q.k();
  std::mt19937_64 rng(params.seed + restart);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  BitVector x(k);
  for (std::size_t i = 0; i < k; ++i) x.set(i, (rng() >> 63) != 0);
  std::vector<std::int64_t> field(k, 0);
  for (ItemId i = 0; i < k; ++i)
    for (auto e = c.start[i]; e < c.start[i + 1]; ++e)
      if (x[c.other[e]]) field[i] += c.weight[e];
  std::int64_t energy = qubo_energy(q, x);

  BitVector best = x;
  std::int64_t best_energy = energy;

  const double t0 = params.initial_for(k);
  const double t1 = params.final_temperature;
  const double ratio = params.sweeps > 1 ? std::pow(t1 / t0, 1.0 / (params.sweeps - 1)) : 1.0;
  double temperature = params.sweeps > 1 ? t0 : t1;

  for (std::uint32_t sweep = 0; sweep < params.sweeps; ++sweep) {
    for (ItemId i = 0; i < k; ++i) {
      const auto gain = c.diag[i] + field[i];
      const auto delta = x[i] ? -gain : gain;
      if (delta > 0 && uniform(rng) >= std::exp(-static_cast<double>(delta) / temperature)) continue;
      x.flip(i);
      energy += delta;
      const std::int64_t sign = x[i] ? 1 : -1;
      for (auto e = c.start[i]; e < c.start[i + 1]; ++e) field[c.other[e]] += sign * c.weight[e];
    }
    if (energy < best_energy) {
      best_energy = energy;
      best = x;
    }
    temperature *= ratio;
  }

  best = repair_selection(q, std::move(best));
  return {best, qubo_energy(q, best)};
}

BitVector pick_best(std::vector<RestartResult>& results) {
  std::size_t winner = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].energy < results[winner].energy) winner = r;
  return std::move(results[winner].bits);
}

}  // namespace

BitVector solve_qubo_annealing_serial(const QMatrix& q, const AnnealParams& params) {
  if (q.k() == 0) throw Error(Errc::DimensionMismatch, "QUBO with no variables");
  params.validate(q.k());
  const Couplings c(q);
  std::vector<RestartResult> results(params.restarts);
  for (std::uint32_t r = 0; r < params.restarts; ++r) results[r] = anneal_once(q, c, params, r);
  return pick_best(results);
}

BitVector solve_qubo_annealing(const QMatrix& q, const AnnealParams& params) {
  if (q.k() == 0) throw Error(Errc::DimensionMismatch, "QUBO with no variables");
  params.validate(q.k());
  const Couplings c(q);
  std::vector<RestartResult> results(params.restarts);
  const auto n = static_cast<std::int64_t>(params.restarts);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r = 0; r < n; ++r)
    results[static_cast<std::size_t>(r)] = anneal_once(q, c, params, static_cast<std::uint32_t>(r));
  return pick_best(results);
}

void write_qubo_sparse(const QMatrix& q, std::ostream& out) {
  const auto k = q.k();
  for (ItemId i = 0; i < k; ++i)
    for (ItemId j = i; j < k; ++j)
      if (const auto v = q.at(i, j); v != 0) out << i << ' ' << j << ' ' << v << '\n';
}

CliqueResult QuboCliqueSolver::solve(const ThresholdGraph& graph) const {
  if (graph.k() == 0) throw Error(Errc::EmptyGraph, "max clique of a graph with no vertices");
  const auto q = build_qubo(graph);
  return CliqueResult{decode_selection(solve_qubo_annealing(q, params_))};
}

}  // namespace mfio

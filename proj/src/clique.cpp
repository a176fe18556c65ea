#include "mfio/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace mfio {

namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(std::uint64_t* w, std::size_t b) { w[b >> 6] |= std::uint64_t{1} << (b & 63); }
inline void clear_bit(std::uint64_t* w, std::size_t b) { w[b >> 6] &= ~(std::uint64_t{1} << (b & 63)); }
inline bool test_bit(const std::uint64_t* w, std::size_t b) { return (w[b >> 6] >> (b & 63)) & 1u; }

inline bool any_bit(const std::uint64_t* w, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (w[i]) return true;
  return false;
}

inline std::size_t popcount(const std::uint64_t* w, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += static_cast<std::size_t>(std::popcount(w[i]));
  return n;
}

// Smallest-last (degeneracy) order: position 0 holds the vertex removed last,
// i.e. the densest core comes first. Ties go to the smallest id.
std::vector<ItemId> degeneracy_order(const ThresholdGraph& g) {
  const auto k = g.k();
  std::vector<std::size_t> degree(k);
  for (ItemId v = 0; v < k; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(k, false);
  std::vector<ItemId> order(k);
  for (std::size_t slot = k; slot-- > 0;) {
    ItemId pick = 0;
    std::size_t best = SIZE_MAX;
    for (ItemId v = 0; v < k; ++v) {
      if (!removed[v] && degree[v] < best) {
        best = degree[v];
        pick = v;
      }
    }
    removed[pick] = true;
    order[slot] = pick;
    const auto row = g.row(pick);
    for (ItemId u = 0; u < k; ++u)
      if (!removed[u] && test_bit(row.data(), u)) --degree[u];
  }
  return order;
}

// Branch and bound over a relabelled copy of the graph in which bit position
// equals rank in the degeneracy order. Each node colours its candidate set
// greedily; the colour count bounds the clique size reachable from it.
class BranchAndBound {
 public:
  BranchAndBound(const ThresholdGraph& g, std::uint64_t max_nodes)
      : k_(g.k()), words_(words_for(g.k())), max_nodes_(max_nodes) {
    order_ = degeneracy_order(g);
    rank_.assign(k_, 0);
    for (std::size_t p = 0; p < k_; ++p) rank_[order_[p]] = static_cast<ItemId>(p);
    adj_.assign(k_ * words_, 0);
    for (ItemId u = 0; u < k_; ++u) {
      const auto row = g.row(u);
      for (ItemId v = 0; v < k_; ++v)
        if (test_bit(row.data(), v)) set_bit(&adj_[rank_[u] * words_], rank_[v]);
    }
    levels_.resize(k_ + 1);
  }

  std::size_t words() const noexcept { return words_; }

  /// Bitset over relabelled positions for a list of original ids.
  std::vector<std::uint64_t> to_positions(std::span<const ItemId> ids) const {
    std::vector<std::uint64_t> bits(words_, 0);
    for (auto v : ids) set_bit(bits.data(), rank_[v]);
    return bits;
  }

  /// Largest clique within `candidates` that beats `floor` vertices. With
  /// `stop_early`, returns as soon as any clique larger than `floor` is found.
  /// Returns the clique in original ids, empty when none beats the floor.
  ItemSet search(const std::vector<std::uint64_t>& candidates, std::size_t floor, bool stop_early) {
    best_size_ = floor;
    best_.clear();
    stop_early_ = stop_early;
    done_ = false;
    current_.clear();
    auto& top = level(0);
    std::copy(candidates.begin(), candidates.end(), top.set.begin());
    if (any_bit(top.set.data(), words_)) expand(0);
    ItemSet out;
    out.reserve(best_.size());
    for (auto p : best_) out.push_back(order_[p]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Level {
    std::vector<std::uint64_t> set;
    std::vector<ItemId> verts;
    std::vector<std::size_t> colours;
  };

  Level& level(std::size_t depth) {
    auto& l = levels_[depth];
    if (l.set.size() != words_) l.set.assign(words_, 0);
    return l;
  }

  void colour(Level& l, std::vector<std::uint64_t>& pool, std::vector<std::uint64_t>& stripe) {
    l.verts.clear();
    l.colours.clear();
    pool = l.set;
    std::size_t c = 0;
    while (any_bit(pool.data(), words_)) {
      ++c;
      stripe = pool;
      for (std::size_t w = 0; w < words_; ++w) {
        while (stripe[w]) {
          const auto b = static_cast<ItemId>(w * 64 + static_cast<std::size_t>(std::countr_zero(stripe[w])));
          clear_bit(pool.data(), b);
          clear_bit(stripe.data(), b);
          const auto* nb = &adj_[b * words_];
          for (std::size_t x = w; x < words_; ++x) stripe[x] &= ~nb[x];
          l.verts.push_back(b);
          l.colours.push_back(c);
        }
      }
    }
  }

  void expand(std::size_t depth) {
    if (++nodes_ > max_nodes_)
      throw Error(Errc::BudgetExceeded, "max clique search exceeded " + std::to_string(max_nodes_) + " nodes");
    auto& l = level(depth);
    colour(l, pool_, stripe_);
    auto& next = level(depth + 1);
    for (std::size_t idx = l.verts.size(); idx-- > 0;) {
      if (current_.size() + l.colours[idx] <= best_size_) return;
      const auto v = l.verts[idx];
      current_.push_back(v);
      const auto* nb = &adj_[v * words_];
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next.set[w] = l.set[w] & nb[w];
        any = any || next.set[w];
      }
      if (!any) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
          if (stop_early_) done_ = true;
        }
      } else {
        expand(depth + 1);
      }
      current_.pop_back();
      if (done_) return;
      clear_bit(l.set.data(), v);
    }
  }

  std::size_t k_;
  std::size_t words_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<ItemId> order_;
  std::vector<ItemId> rank_;
  std::vector<std::uint64_t> adj_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> pool_, stripe_;
  std::vector<ItemId> current_;
  std::vector<ItemId> best_;
  std::size_t best_size_ = 0;
  bool stop_early_ = false;
  bool done_ = false;
};

}  // namespace

ThresholdGraph::ThresholdGraph(std::size_t k, Threshold t)
    : k_(k), words_(words_for(k)), t_(t), bits_(k * words_for(k), 0) {}

ThresholdGraph ThresholdGraph::from_edges(std::size_t k, std::span<const std::pair<ItemId, ItemId>> edges,
                                          Threshold t) {
  ThresholdGraph g(k, t);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

void ThresholdGraph::add_edge(ItemId i, ItemId j) {
  if (i == j || i >= k_ || j >= k_)
    throw Error(Errc::InvalidVertex, "bad edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  set_bit(&bits_[i * words_], j);
  set_bit(&bits_[j * words_], i);
}

std::size_t ThresholdGraph::degree(ItemId v) const noexcept { return popcount(row(v).data(), words_); }

std::size_t ThresholdGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (ItemId v = 0; v < k_; ++v) twice += degree(v);
  return twice / 2;
}

ThresholdGraph threshold_graph(const PairFrequencyMatrix& matrix, const Threshold& t) {
  const auto checked = Threshold::make(t.num, t.den);
  const auto k = matrix.k();
  ThresholdGraph g(k, checked);
  const auto db_size = matrix.db_size();
  const auto counts = matrix.counts();
  const auto words = g.words_per_row();
  // Row i is written only by the iteration that owns it.
  auto* bits = g.bits_.data();
#pragma omp parallel for schedule(dynamic, 8) if (k > 512)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(k); ++si) {
    const auto i = static_cast<ItemId>(si);
    auto* row = bits + static_cast<std::size_t>(i) * words;
    for (ItemId j = 0; j < k; ++j) {
      if (j == i) continue;
      if (checked.admits(counts[pair_index(i, j, k)], db_size)) set_bit(row, j);
    }
  }
  return g;
}

bool is_clique(const ThresholdGraph& graph, std::span<const ItemId> vertices) {
  for (auto v : vertices)
    if (v >= graph.k()) throw Error(Errc::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  for (std::size_t p = 0; p < vertices.size(); ++p)
    for (std::size_t q = p + 1; q < vertices.size(); ++q) {
      if (vertices[p] == vertices[q]) continue;
      if (!graph.adjacent(vertices[p], vertices[q])) return false;
    }
  return true;
}

CliqueResult max_clique_exact(const ThresholdGraph& graph, const ExactCliqueOptions& options) {
  const auto k = graph.k();
  if (k == 0) throw Error(Errc::EmptyGraph, "max clique of a graph with no vertices");
  BranchAndBound bnb(graph, options.max_nodes);

  std::vector<ItemId> all(k);
  std::iota(all.begin(), all.end(), ItemId{0});
  const auto any_max = bnb.search(bnb.to_positions(all), 0, false);
  const auto omega = any_max.size();

  // Walk ids upward, keeping a vertex whenever the remaining candidates
  // above it can still complete a clique of size omega.
  ItemSet chosen;
  std::vector<ItemId> candidates = all;
  while (chosen.size() < omega) {
    const auto v = candidates.front();
    std::vector<ItemId> rest;
    for (std::size_t p = 1; p < candidates.size(); ++p)
      if (graph.adjacent(v, candidates[p])) rest.push_back(candidates[p]);
    const auto need = omega - chosen.size() - 1;
    bool feasible = need == 0;
    if (!feasible && rest.size() >= need)
      feasible = bnb.search(bnb.to_positions(rest), need - 1, true).size() >= need;
    if (feasible) {
      chosen.push_back(v);
      candidates = std::move(rest);
    } else {
      candidates.erase(candidates.begin());
    }
  }
  return CliqueResult{std::move(chosen)};
}

}  // namespace mfio

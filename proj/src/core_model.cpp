#include "mfio/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfio {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidItem: return "InvalidItem";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::EmptyDatabase: return "EmptyDatabase";
    case Errc::SetTooSmall: return "SetTooSmall";
    case Errc::InvalidThreshold: return "InvalidThreshold";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::NoCliqueFound: return "NoCliqueFound";
    case Errc::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case Errc::InvalidGenConfig: return "InvalidGenConfig";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ItemId ItemCatalog::intern(std::string_view token) {
  const auto key = trim(token);
  if (key.empty()) throw Error(Errc::InvalidItem, "empty item token");
  std::string owned(key);
  if (auto it = index_.find(owned); it != index_.end()) return it->second;
  const auto id = static_cast<ItemId>(names_.size());
  names_.push_back(owned);
  index_.emplace(std::move(owned), id);
  return id;
}

const std::string& ItemCatalog::name(ItemId id) const {
  if (id >= names_.size()) throw Error(Errc::InvalidItem, "item id " + std::to_string(id) + " out of range");
  return names_[id];
}

ItemId ItemCatalog::lookup(std::string_view token) const {
  auto it = index_.find(std::string(trim(token)));
  if (it == index_.end()) throw Error(Errc::InvalidItem, "unknown item token '" + std::string(token) + "'");
  return it->second;
}

bool ItemCatalog::contains(std::string_view token) const {
  return index_.contains(std::string(trim(token)));
}

void normalize_itemset(ItemSet& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

TransactionDb::TransactionDb(ItemCatalog catalog, std::vector<ItemSet> transactions)
    : catalog_(std::move(catalog)), transactions_(std::move(transactions)) {
  const auto k = catalog_.size();
  for (std::size_t t = 0; t < transactions_.size(); ++t) {
    const auto& tx = transactions_[t];
    for (std::size_t p = 0; p < tx.size(); ++p) {
      if (tx[p] >= k)
        throw Error(Errc::InvalidItem, "transaction " + std::to_string(t) + " references unknown id");
      if (p > 0 && tx[p - 1] >= tx[p])
        throw Error(Errc::InvalidArgument, "transaction " + std::to_string(t) + " is not strictly increasing");
    }
  }
}

TransactionDb TransactionDb::from_token_lists(const std::vector<std::vector<std::string>>& lists) {
  ItemCatalog catalog;
  std::vector<ItemSet> transactions;
  transactions.reserve(lists.size());
  for (const auto& list : lists) {
    ItemSet tx;
    tx.reserve(list.size());
    for (const auto& token : list) tx.push_back(catalog.intern(token));
    normalize_itemset(tx);
    transactions.push_back(std::move(tx));
  }
  return TransactionDb(std::move(catalog), std::move(transactions));
}

std::vector<std::string> TransactionDb::tokens_of(std::span<const ItemId> items) const {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (auto id : items) out.push_back(catalog_.name(id));
  return out;
}

ItemSet TransactionDb::ids_of(const std::vector<std::string>& tokens) const {
  ItemSet out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back(catalog_.lookup(token));
  normalize_itemset(out);
  return out;
}

Threshold Threshold::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(Errc::InvalidThreshold, "zero denominator");
  if (num > den)
    throw Error(Errc::InvalidThreshold,
                "threshold " + std::to_string(num) + "/" + std::to_string(den) + " exceeds 1");
  return Threshold{num, den};
}

Threshold Threshold::dyadic(std::uint64_t num, unsigned log2_den) {
  if (log2_den > 62) throw Error(Errc::InvalidThreshold, "dyadic denominator exceeds 2^62");
  return make(num, std::uint64_t{1} << log2_den);
}

std::string to_string(const Threshold& t) {
  std::ostringstream os;
  os << t.num << '/' << t.den;
  return os.str();
}

std::size_t pair_index(ItemId i, ItemId j, std::size_t k) {
  if (i == j) throw Error(Errc::InvalidPair, "self pair (" + std::to_string(i) + "," + std::to_string(i) + ")");
  if (i >= k || j >= k)
    throw Error(Errc::InvalidPair, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") out of range for k=" + std::to_string(k));
  if (i > j) std::swap(i, j);
  const std::size_t a = i;
  return a * (2 * k - a - 1) / 2 + (j - a - 1);
}

PairFrequencyMatrix::PairFrequencyMatrix(std::size_t k, std::uint64_t db_size, std::vector<std::uint64_t> counts)
    : k_(k), db_size_(db_size), counts_(std::move(counts)) {
  if (db_size_ == 0) throw Error(Errc::EmptyDatabase, "relative frequencies need at least one transaction");
  if (counts_.size() != pair_count_for(k_))
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(pair_count_for(k_)) + " pair counts, got " +
                                           std::to_string(counts_.size()));
  if (std::any_of(counts_.begin(), counts_.end(), [&](auto c) { return c > db_size_; }))
    throw Error(Errc::InvalidArgument, "pair count exceeds database size");
}

}  // namespace mfio

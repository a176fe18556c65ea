#include "mfio/ingest.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace mfio {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

void require_readable(std::istream& in) {
  if (!in) throw Error(Errc::IoError, "input stream is not readable");
}

// getline stops at EOF with failbit set; only badbit signals a read error.
void check_stream_after_read(std::istream& in) {
  if (in.bad()) throw Error(Errc::IoError, "read error on input stream");
}

TransactionDb finish(ItemCatalog catalog, std::vector<ItemSet> transactions) {
  if (transactions.empty()) throw Error(Errc::EmptyDatabase, "no transactions parsed");
  return TransactionDb(std::move(catalog), std::move(transactions));
}

}  // namespace

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "items") return InputFormat::ItemLines;
  if (name == "words") return InputFormat::WordLines;
  return std::nullopt;
}

TransactionDb parse_item_lines(std::istream& in) {
  require_readable(in);
  ItemCatalog catalog;
  std::vector<ItemSet> transactions;
  std::string line;
  ItemSet tx;
  while (std::getline(in, line)) {
    std::size_t first = 0;
    while (first < line.size() && is_separator(line[first]) && line[first] != ',') ++first;
    if (first == line.size() || line[first] == '#') continue;

    tx.clear();
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_separator(line[pos])) ++pos;
      const auto start = pos;
      while (pos < line.size() && !is_separator(line[pos])) ++pos;
      if (pos > start) tx.push_back(catalog.intern(std::string_view(line).substr(start, pos - start)));
    }
    // A line of bare commas carries no items.
    if (tx.empty()) continue;
    normalize_itemset(tx);
    transactions.push_back(tx);
  }
  check_stream_after_read(in);
  return finish(std::move(catalog), std::move(transactions));
}

TransactionDb parse_word_lines(std::istream& in) {
  require_readable(in);
  ItemCatalog catalog;
  std::vector<ItemSet> transactions;
  // Letter -> id cache; interning goes through the catalog for first-seen order.
  std::array<std::int32_t, 26> letter_id;
  letter_id.fill(-1);
  std::string line;
  while (std::getline(in, line)) {
    ItemSet tx;
    // First-seen order follows the letters' order of appearance in the word.
    for (char c : line) {
      const auto u = static_cast<unsigned char>(c);
      if (u >= 128 || !std::isalpha(u)) continue;
      const int letter = std::tolower(u) - 'a';
      if (letter_id[letter] < 0) {
        const char token[2] = {static_cast<char>('a' + letter), '\0'};
        letter_id[letter] = static_cast<std::int32_t>(catalog.intern(token));
      }
      tx.push_back(static_cast<ItemId>(letter_id[letter]));
    }
    if (tx.empty()) continue;
    normalize_itemset(tx);
    transactions.push_back(std::move(tx));
  }
  check_stream_after_read(in);
  return finish(std::move(catalog), std::move(transactions));
}

TransactionDb parse_transactions(std::istream& in, InputFormat format) {
  return format == InputFormat::ItemLines ? parse_item_lines(in) : parse_word_lines(in);
}

TransactionDb load_transactions(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_transactions(in, format);
}

void write_item_lines(const TransactionDb& db, std::ostream& out) {
  const auto& catalog = db.catalog();
  for (const auto& tx : db.transactions()) {
    for (std::size_t p = 0; p < tx.size(); ++p) {
      if (p) out << ' ';
      out << catalog.name(tx[p]);
    }
    out << '\n';
  }
  if (!out) throw Error(Errc::IoError, "write failed");
}

}  // namespace mfio

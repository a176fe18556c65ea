#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "mfio/core_model.hpp"

namespace mfio {

enum class InputFormat {
  /// One transaction per line; items split on ',' and ASCII whitespace.
  ItemLines,
  /// One word per line; the distinct letters of the word form a transaction.
  WordLines,
};

std::optional<InputFormat> parse_input_format(std::string_view name);

/// Blank lines and lines whose first non-space character is '#' are skipped.
TransactionDb parse_item_lines(std::istream& in);
TransactionDb parse_word_lines(std::istream& in);
TransactionDb parse_transactions(std::istream& in, InputFormat format);
TransactionDb load_transactions(const std::filesystem::path& path, InputFormat format);

/// Writes `db` in item-lines format, items space-separated in id order.
void write_item_lines(const TransactionDb& db, std::ostream& out);

}  // namespace mfio

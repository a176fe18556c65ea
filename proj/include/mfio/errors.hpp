#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfio {

enum class Errc {
  InvalidItem,
  InvalidPair,
  InvalidArgument,
  IoError,
  EmptyDatabase,
  SetTooSmall,
  InvalidThreshold,
  EmptyGraph,
  InvalidVertex,
  BudgetExceeded,
  DimensionMismatch,
  NTooLarge,
  NoCliqueFound,
  OracleBudgetExceeded,
  InvalidGenConfig,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mfio

#pragma once

#include <stdexcept>
#include <string>

namespace sparseinv {

enum class ErrorKind {
  parse,
  invalid_argument,
  not_sparse,
  already_saturated,
  resource_limit,
  structure_violation,
  stale_distances,
  incomplete_table,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::not_sparse: return "NotSparse";
    case ErrorKind::already_saturated: return "AlreadySaturated";
    case ErrorKind::resource_limit: return "ResourceLimit";
    case ErrorKind::structure_violation: return "StructureViolation";
    case ErrorKind::stale_distances: return "StaleDistances";
    case ErrorKind::incomplete_table: return "IncompleteTable";
  }
  return "Error";
}

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by Word::parse; carries the offending character and its position.
class ParseError : public Error {
 public:
  ParseError(char c, std::size_t position)
      : Error(ErrorKind::parse, "unexpected character '" + std::string(1, c) +
                                    "' at position " +
                                    std::to_string(position)),
        character_(c),
        position_(position) {}

  char character() const noexcept { return character_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char character_;
  std::size_t position_;
};

}  // namespace sparseinv

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyckcat {

enum class ErrorKind {
  SyntaxError,
  NegativeHeight,
  CatastropheHeightMismatch,
  OpenPath,
  PositionOutOfRange,
  NotAnOccurrence,
  BruteForceBoundExceeded,
  PreconditionViolated,
  NoCatastrophe,
  DivisionByNonUnit,
  NonSquareConstantTerm,
  UnknownName,
};

std::string_view error_name(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the contract error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace dyckcat

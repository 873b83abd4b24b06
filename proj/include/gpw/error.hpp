#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpw {

/// Base of every error raised by the library. `kind()` is a stable tag used
/// by the command line front end to pick an exit code.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define GPW_DEFINE_ERROR(Name, tag)                                            \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(tag, what) {}               \
  };

GPW_DEFINE_ERROR(InvalidGroupError, "invalid-group")
GPW_DEFINE_ERROR(GroupMismatchError, "group-mismatch")
GPW_DEFINE_ERROR(DivisionByZeroError, "division-by-zero")
GPW_DEFINE_ERROR(AlgebraMismatchError, "algebra-mismatch")
GPW_DEFINE_ERROR(InvalidCocycleError, "invalid-cocycle")
GPW_DEFINE_ERROR(InvalidInputError, "invalid-input")
GPW_DEFINE_ERROR(EvaluationContractError, "evaluation-contract")
GPW_DEFINE_ERROR(ContractError, "contract")
GPW_DEFINE_ERROR(UnsupportedOperationError, "unsupported-operation")
GPW_DEFINE_ERROR(InconsistencyError, "inconsistency")
GPW_DEFINE_ERROR(ResourceError, "resource")
GPW_DEFINE_ERROR(UsageError, "usage")

#undef GPW_DEFINE_ERROR

/// Syntax errors in polynomial text, literals and algebra files. `position`
/// is a character offset for one-line inputs and a line number for files.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error("parse", what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace gpw

#pragma once

#include <stdexcept>
#include <string>

namespace hnslope {

enum class ErrorKind {
  LengthMismatch,
  EmptyType,
  OutOfDomain,
  BadArity,
  DomainMismatch,
  EndpointMismatch,
  InvalidChain,
  InvalidPoset,
  NotAdmissible,
  DivisionByZero,
  PrecisionExhausted,
  NegativeValuation,
  NotTorsion,
  NotIntegral,
  Singular,
  RankMismatch,
  NotEffectiveAtN,
  FieldMismatch,
  TooLarge,
  BadTrivialization,
  NotContained,
  ParseError,
  SchemaError,
  IoError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Process exit code for an error surfaced by the CLI:
/// 1 computation, 2 usage/parse/io, 3 precision exhausted, 4 not admissible.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace hnslope

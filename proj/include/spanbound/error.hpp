#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spanbound {

enum class ErrorKind {
  // parsing and construction
  SyntaxError,
  ZeroDenominator,
  UnknownGroupElement,
  ReducibleModulus,
  UnverifiableModulus,
  NonPrimeCharacteristic,
  UnsupportedGroupCharacteristic,
  InvalidGroup,
  InvalidArgument,
  ParseError,
  // arithmetic
  BackendMismatch,
  ZeroInverse,
  NotAUnit,
  UnsupportedInverse,
  // linear algebra
  ShapeMismatch,
  DuplicateAlpha,
  ArityMismatch,
  // spans and structure
  EmptySet,
  UnsupportedBackend,
  NotStabilized,
  NotDivisionClosed,
  BudgetExceeded,
  // theorem checkers
  NonCommutativeBackend,
  InfiniteFieldExhaustive,
  HeuristicRho,
  CommutationFailure,
  NonCommutativeA,
  NonCommutativePrefix,
  WitnessCheckFailed,
  WrongArity,
  OneElement,
  HypothesisFailed,
  UnitPreconditionFailed,
  NonAbelianForThAlg1,
  // connectivity
  ZeroSubspace,
  LambdaTooLarge,
  // groups
  GroupMismatch,
  TorsionPresent,
  NonAbelianGroup,
  // cli
  IncompatibleChecker,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace spanbound

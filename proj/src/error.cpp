#include "spanbound/error.hpp"

namespace spanbound {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::UnknownGroupElement: return "UnknownGroupElement";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::UnverifiableModulus: return "UnverifiableModulus";
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::UnsupportedGroupCharacteristic: return "UnsupportedGroupCharacteristic";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::UnsupportedInverse: return "UnsupportedInverse";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DuplicateAlpha: return "DuplicateAlpha";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotDivisionClosed: return "NotDivisionClosed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonCommutativeBackend: return "NonCommutativeBackend";
    case ErrorKind::InfiniteFieldExhaustive: return "InfiniteFieldExhaustive";
    case ErrorKind::HeuristicRho: return "HeuristicRho";
    case ErrorKind::CommutationFailure: return "CommutationFailure";
    case ErrorKind::NonCommutativeA: return "NonCommutativeA";
    case ErrorKind::NonCommutativePrefix: return "NonCommutativePrefix";
    case ErrorKind::WitnessCheckFailed: return "WitnessCheckFailed";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::OneElement: return "OneElement";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnitPreconditionFailed: return "UnitPreconditionFailed";
    case ErrorKind::NonAbelianForThAlg1: return "NonAbelianForThAlg1";
    case ErrorKind::ZeroSubspace: return "ZeroSubspace";
    case ErrorKind::LambdaTooLarge: return "LambdaTooLarge";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::TorsionPresent: return "TorsionPresent";
    case ErrorKind::NonAbelianGroup: return "NonAbelianGroup";
    case ErrorKind::IncompatibleChecker: return "IncompatibleChecker";
  }
  return "UnknownError";
}

}  // namespace spanbound

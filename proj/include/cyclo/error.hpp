#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorCode {
  OrderCapExceeded,
  NotAGroup,
  UnknownElement,
  NotInSL2,
  GroupMismatch,
  DimensionMismatch,
  NotIdempotent,
  TruncationMismatch,
  IntegralityViolation,
  NotASubset,
  IndexNotInTruncation,
  NotADivisor,
  NotPrime,
  LevelNotCovered,
  TruncationTooSmall,
  SupportNotDeclared,
  ZeroArgument,
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotInSL2: return "NotInSL2";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::IndexNotInTruncation: return "IndexNotInTruncation";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::LevelNotCovered: return "LevelNotCovered";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::SupportNotDeclared: return "SupportNotDeclared";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every module. `what()` is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace cyclo

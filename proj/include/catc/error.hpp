#pragma once

#include <stdexcept>
#include <string>

namespace catc {

enum class ErrorCode {
  ParseError,
  UnknownIdentifier,
  RedefinedIdentifier,
  UseBeforeDefinition,
  CycleDetected,
  UnknownVertex,
  UnknownMorphism,
  UnknownBasicMorphism,
  ObjectMismatch,
  EmptySubdiagram,
  StaleBasicAttachment,
  KindViolation,
  NotConstructive,
  CapabilityMissing,
  SearchBudgetExceeded,
  DomainError,
  DimensionMismatch,
  NoNontrivialSolution,
  RankAmbiguous,
  DegreeBudgetExceeded,
  MultipleOutputsUnsupported,
  NotAFormula,
  VariableOutOfRange,
  NotDetermined,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code), detail_(msg) {}
  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::RedefinedIdentifier: return "RedefinedIdentifier";
    case ErrorCode::UseBeforeDefinition: return "UseBeforeDefinition";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownMorphism: return "UnknownMorphism";
    case ErrorCode::UnknownBasicMorphism: return "UnknownBasicMorphism";
    case ErrorCode::ObjectMismatch: return "ObjectMismatch";
    case ErrorCode::EmptySubdiagram: return "EmptySubdiagram";
    case ErrorCode::StaleBasicAttachment: return "StaleBasicAttachment";
    case ErrorCode::KindViolation: return "KindViolation";
    case ErrorCode::NotConstructive: return "NotConstructive";
    case ErrorCode::CapabilityMissing: return "CapabilityMissing";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoNontrivialSolution: return "NoNontrivialSolution";
    case ErrorCode::RankAmbiguous: return "RankAmbiguous";
    case ErrorCode::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorCode::MultipleOutputsUnsupported: return "MultipleOutputsUnsupported";
    case ErrorCode::NotAFormula: return "NotAFormula";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::NotDetermined: return "NotDetermined";
  }
  return "Error";
}

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace catc

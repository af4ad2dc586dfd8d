#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotcord {

enum class ErrorKind {
  OddDimension,
  NonUnimodularIntersectionForm,
  EvenParameterCount,
  EvenEntry,
  BadParameter,
  DimensionMismatch,
  AtJumpAngle,
  PrecisionExhausted,
  MarginTooSmall,
  DegreeTooLarge,
  UnknotInput,
  HypothesisUnverified,
  InconsistentBounds,
  NonzeroFraming,
  ImprimitiveClass,
  SearchExhausted,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NonUnimodularIntersectionForm: return "NonUnimodularIntersectionForm";
    case ErrorKind::EvenParameterCount: return "EvenParameterCount";
    case ErrorKind::EvenEntry: return "EvenEntry";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AtJumpAngle: return "AtJumpAngle";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::MarginTooSmall: return "MarginTooSmall";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::UnknotInput: return "UnknotInput";
    case ErrorKind::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorKind::InconsistentBounds: return "InconsistentBounds";
    case ErrorKind::NonzeroFraming: return "NonzeroFraming";
    case ErrorKind::ImprimitiveClass: return "ImprimitiveClass";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position and the tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& detail)
      : Error(ErrorKind::ParseError, format(line, column, expected, detail)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::vector<std::string>& expected, const std::string& detail) {
    std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace knotcord

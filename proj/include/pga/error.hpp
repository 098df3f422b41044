#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pga {

enum class ErrorKind {
  NonAssociative,
  MissingIdentity,
  BadInverse,
  BadCompositionDomain,
  EmptyObjectSet,
  UnknownObject,
  NotConnected,
  InvalidRing,
  OutsideDomain,
  NotSubIdeal,
  ShapeMismatch,
  NotUnital,
  RingNotDirectSum,
  NotInvariant,
  HypothesesNotMet,
  InternalInconsistency,
  C1Violation,
  C2Violation,
  C3Violation,
  ParseError,
  UnresolvedReference,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::BadInverse: return "BadInverse";
    case ErrorKind::BadCompositionDomain: return "BadCompositionDomain";
    case ErrorKind::EmptyObjectSet: return "EmptyObjectSet";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::NotSubIdeal: return "NotSubIdeal";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::RingNotDirectSum: return "RingNotDirectSum";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::C1Violation: return "C1Violation";
    case ErrorKind::C2Violation: return "C2Violation";
    case ErrorKind::C3Violation: return "C3Violation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
  }
  return "Unknown";
}

/// Base exception for every library failure. `witness` carries the names of
/// the arrows (or atoms) that exhibit the problem, in the order the check
/// visited them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

/// Input-text failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pga

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace softaura {

enum class ErrorKind {
  ContextMismatch,
  EmptyContext,
  DuplicateIdentifier,
  UniverseTooLarge,
  UnknownPoint,
  UnknownParameter,
  MissingParameter,
  ExtraParameter,
  MissingPoint,
  ExtraPoint,
  NotFound,
  NotEnumerable,
  CapExceeded,
  SizeGuard,
  InvalidPartition,
  InvalidMapping,
  SpaceMismatch,
  NotSingletonE,
  PreconditionUnmet,
  InternalNonMonotone,
  InvalidDocument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::EmptyContext: return "EmptyContext";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::ExtraParameter: return "ExtraParameter";
    case ErrorKind::MissingPoint: return "MissingPoint";
    case ErrorKind::ExtraPoint: return "ExtraPoint";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidMapping: return "InvalidMapping";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotSingletonE: return "NotSingletonE";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::InternalNonMonotone: return "InternalNonMonotone";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Resource-cap failures are reported separately from domain violations.
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::SizeGuard;
  }

 private:
  ErrorKind kind_;
};

}  // namespace softaura

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critplanar {

enum class ErrorCode {
  // graph surgery
  EdgeAbsent,
  EdgeExists,
  SelfLoop,
  SelfLoopWouldForm,
  SameVertex,
  UnknownVertex,
  DuplicateNeighbor,
  EmptyOperandList,
  // planarity
  InconsistentRotation,
  Disconnected,
  PathEdgesMissing,
  // coloring
  ImproperFixedAssignment,
  BoundExceeded,
  PreconditionUncolorable,
  TooLarge,
  CapExceeded,
  // criticality
  NotCritical,
  // constructions
  EvenOperandCount,
  InvalidFacePath,
  IdentificationCollision,
  CrossEdgeExists,
  // io
  SyntaxError,
  ArityError,
  UnknownBase,
  DecodeError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::EdgeExists: return "EdgeExists";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::SelfLoopWouldForm: return "SelfLoopWouldForm";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::EmptyOperandList: return "EmptyOperandList";
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PathEdgesMissing: return "PathEdgesMissing";
    case ErrorCode::ImproperFixedAssignment: return "ImproperFixedAssignment";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::PreconditionUncolorable: return "PreconditionUncolorable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::EvenOperandCount: return "EvenOperandCount";
    case ErrorCode::InvalidFacePath: return "InvalidFacePath";
    case ErrorCode::IdentificationCollision: return "IdentificationCollision";
    case ErrorCode::CrossEdgeExists: return "CrossEdgeExists";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::UnknownBase: return "UnknownBase";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace critplanar

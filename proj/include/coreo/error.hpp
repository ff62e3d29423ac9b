#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coreo {

enum class ErrorCode {
  InvalidId,
  UnknownVertex,
  UnknownEdge,
  DuplicateVertexId,
  DuplicateEdgeId,
  NoTrail,
  InfeasibleStart,
  BudgetExceeded,
  Malformed,
  NotACircuit,
  UnknownName,
  InvalidDocument,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the engine carries one of the codes above so that
// front ends (CLI exit codes, HTTP statuses) can map it without string
// matching.
class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coreo

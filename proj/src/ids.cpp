#include "coreo/ids.hpp"

#include <algorithm>

#include "coreo/error.hpp"

namespace coreo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::NoTrail: return "NoTrail";
    case ErrorCode::InfeasibleStart: return "InfeasibleStart";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::NotACircuit: return "NotACircuit";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

VertexId::VertexId(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) {
    throw EngineError(ErrorCode::InvalidId,
                      "vertex id must be uppercase letters: '" + name_ + "'");
  }
}

bool VertexId::is_valid(std::string_view name) noexcept {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return c >= 'A' && c <= 'Z';
  });
}

std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) noexcept {
  if (auto c = a.name_.size() <=> b.name_.size(); c != 0) return c;
  return a.name_.compare(b.name_) <=> 0;
}

EdgeId::EdgeId(std::uint32_t value) : value_(value) {
  if (value_ == 0) {
    throw EngineError(ErrorCode::InvalidId, "edge id must be positive");
  }
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << v.str();
}

std::ostream& operator<<(std::ostream& os, const EdgeId& e) {
  return os << e.value();
}

}  // namespace coreo

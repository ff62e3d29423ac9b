#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace coreo {

/// Vertex (region, dance position) identifier: a nonempty run of uppercase
/// ASCII letters. Ordered shortlex, so A < B < ... < Z < AA < AB.
class VertexId {
 public:
  explicit VertexId(std::string name);

  static bool is_valid(std::string_view name) noexcept;

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a,
                                          const VertexId& b) noexcept;

 private:
  std::string name_;
};

/// Edge (bridge, dance step) identifier: a positive integer.
class EdgeId {
 public:
  explicit EdgeId(std::uint32_t value);

  std::uint32_t value() const noexcept { return value_; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;

 private:
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);
std::ostream& operator<<(std::ostream& os, const EdgeId& e);

}  // namespace coreo

template <>
struct std::hash<coreo::VertexId> {
  std::size_t operator()(const coreo::VertexId& v) const noexcept {
    return std::hash<std::string>{}(v.str());
  }
};

template <>
struct std::hash<coreo::EdgeId> {
  std::size_t operator()(const coreo::EdgeId& e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value());
  }
};

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "coreo/multigraph.hpp"

namespace coreo {

/// Alternating walk v0 e1 v1 ... ek vk. `vertices.size() == edges.size() + 1`
/// for any trail built by this library; parse/validate also accept trails
/// that do not respect the host graph and report why.
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  const VertexId& start() const { return vertices.front(); }
  const VertexId& end() const { return vertices.back(); }
  bool is_closed() const { return vertices.front() == vertices.back(); }

  static Trail single(VertexId v) { return Trail{{std::move(v)}, {}}; }

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Builds one Eulerian trail by cycle splicing (Hierholzer). Without `start`
/// the smallest feasible start is used. At every expansion the unused
/// incident edge with the smallest id is taken, so the result depends only
/// on the graph. For an all-even graph the result is a circuit.
///
/// Throws NoTrail (no Eulerian trail, or no vertices at all), UnknownVertex,
/// or InfeasibleStart.
Trail find_trail(const Multigraph& g,
                 const std::optional<VertexId>& start = std::nullopt);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumerateOptions {
  std::optional<VertexId> start;
  /// Maximum number of search nodes expanded before BudgetExceeded.
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Stop quietly after this many trails.
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
};

/// Exhaustive backtracking over all Eulerian trails. Results are grouped by
/// start vertex in id order and, within a start, in lexicographic edge-id
/// order. Makes no use of degree parity, so it doubles as an oracle for
/// classify().
std::vector<Trail> enumerate_trails(const Multigraph& g,
                                    const EnumerateOptions& options = {});

}  // namespace coreo

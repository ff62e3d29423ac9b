#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coreo/multigraph.hpp"
#include "coreo/trails.hpp"

namespace coreo {

// Trail strings alternate vertex tokens (maximal runs of uppercase letters)
// and edge tokens (maximal runs of digits, no leading zero), starting and
// ending with a vertex: "A1D6C5B4A3B2A". No separators, no whitespace.

/// Throws Malformed.
Trail parse_trail(std::string_view text);

std::string render_trail(const Trail& t);

namespace violation {

/// Vertex and edge counts do not alternate (only possible for hand-built
/// Trail values).
struct BadShape {
  friend bool operator==(const BadShape&, const BadShape&) = default;
};
struct UnknownVertex {
  std::size_t position;
  VertexId vertex;
  friend bool operator==(const UnknownVertex&, const UnknownVertex&) = default;
};
struct UnknownEdge {
  std::size_t step;
  EdgeId edge;
  friend bool operator==(const UnknownEdge&, const UnknownEdge&) = default;
};
/// Step `step` (0-based) uses an edge that does not join the vertices on
/// either side of it.
struct WrongEndpoints {
  std::size_t step;
  friend bool operator==(const WrongEndpoints&, const WrongEndpoints&) = default;
};
struct RepeatedEdge {
  EdgeId edge;
  friend bool operator==(const RepeatedEdge&, const RepeatedEdge&) = default;
};
struct MissingEdges {
  std::set<EdgeId> edges;
  friend bool operator==(const MissingEdges&, const MissingEdges&) = default;
};

}  // namespace violation

using Violation =
    std::variant<violation::BadShape, violation::UnknownVertex,
                 violation::UnknownEdge, violation::WrongEndpoints,
                 violation::RepeatedEdge, violation::MissingEdges>;

std::string describe(const Violation& v);

enum class TrailStatus {
  Eulerian,    // a legal walk using every edge exactly once
  WellFormed,  // a legal walk that leaves some edges out
  Invalid,
};

std::string to_string(TrailStatus s);

struct TrailReport {
  TrailStatus status = TrailStatus::Invalid;
  bool is_circuit = false;
  std::vector<Violation> violations;

  bool eulerian() const { return status == TrailStatus::Eulerian; }
};

/// Checks `t` against `g`. Never throws: problems are returned as data.
TrailReport validate_trail(const Trail& t, const Multigraph& g);

/// Moves the first `k` vertex-edge-vertex triples of a circuit to its end;
/// negative `k` rotates the other way. Throws NotACircuit.
Trail rotate_circuit(const Trail& t, std::ptrdiff_t k);

Trail reverse_trail(const Trail& t);

struct VertexTraffic {
  std::size_t entries = 0;
  std::size_t exits = 0;

  long balance() const {
    return static_cast<long>(exits) - static_cast<long>(entries);
  }
  friend bool operator==(const VertexTraffic&, const VertexTraffic&) = default;
};

/// Entry/exit counts along a trail. Leaving the start counts as an exit and
/// arriving at the end as an entry, so for an open trail the start has one
/// more exit and the end one more entry; everything else balances.
struct TrailAudit {
  std::map<VertexId, VertexTraffic> traffic;
  bool is_circuit = false;
  Trail trail;

  std::size_t total_entries() const;
  std::size_t total_exits() const;
  bool is_eulerian_for(const Multigraph& g) const;
};

TrailAudit entry_exit_audit(const Trail& t);

}  // namespace coreo

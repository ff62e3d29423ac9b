#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "coreo/multigraph.hpp"

namespace coreo {

/// Degree of `v`; a self-loop counts twice. Throws UnknownVertex.
std::size_t degree(const Multigraph& g, const VertexId& v);

std::map<VertexId, std::size_t> degree_table(const Multigraph& g);

std::set<VertexId> odd_vertices(const Multigraph& g);

/// True iff all edges lie in one connected component. Vertices of degree 0
/// are ignored, and an edgeless graph is connected.
bool is_edge_connected(const Multigraph& g);

enum class EulerKind { I, II, III };

enum class NoTrailReason { OddCount, Disconnected };

/// Every vertex even: circuits from every non-isolated vertex.
struct TypeI {
  friend bool operator==(const TypeI&, const TypeI&) = default;
};

/// Exactly two odd vertices: open trails between them, either direction.
struct TypeII {
  VertexId first;
  VertexId second;
  friend bool operator==(const TypeII&, const TypeII&) = default;
};

/// No Eulerian trail. `odd_count` is reported for both reasons.
struct TypeIII {
  NoTrailReason reason;
  std::size_t odd_count;
  friend bool operator==(const TypeIII&, const TypeIII&) = default;
};

using EulerType = std::variant<TypeI, TypeII, TypeIII>;

EulerKind kind_of(const EulerType& t);
std::string to_string(EulerKind k);  // "I", "II", "III"
std::string to_string(NoTrailReason r);

struct ClassificationReport {
  EulerType euler_type;
  std::set<VertexId> odd_vertices;
  std::map<VertexId, std::size_t> degree_table;
  std::set<VertexId> feasible_starts;
  bool connected = true;
  /// TypeI because the graph has no edges at all.
  bool degenerate = false;

  EulerKind kind() const { return kind_of(euler_type); }
};

/// Disconnection is reported in preference to a bad odd count when both
/// apply.
ClassificationReport classify(const Multigraph& g);

std::set<VertexId> feasible_starts(const Multigraph& g);

}  // namespace coreo

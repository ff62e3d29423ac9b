#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coreo/ids.hpp"

namespace coreo {

/// Unordered endpoint pair of an edge, stored with first <= second.
struct Endpoints {
  VertexId first;
  VertexId second;

  Endpoints(VertexId a, VertexId b);

  bool is_loop() const { return first == second; }
  bool touches(const VertexId& v) const { return first == v || second == v; }

  /// The endpoint opposite to `from`; for a loop, `from` itself.
  const VertexId& other(const VertexId& from) const {
    return from == first ? second : first;
  }

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Undirected multigraph with stable vertex and edge identifiers. Parallel
/// edges and self-loops are allowed; a loop contributes 2 to its vertex's
/// degree.
///
/// Vertices and edges are kept in id order, which is what every algorithm in
/// this library uses for tie-breaking.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws DuplicateVertexId.
  void add_vertex(const VertexId& id, std::string label = {});
  /// Throws UnknownVertex or DuplicateEdgeId.
  void add_edge(EdgeId id, const VertexId& u, const VertexId& v);
  /// Throws UnknownEdge.
  void remove_edge(EdgeId id);
  /// Removes an isolated vertex. Throws UnknownVertex, or InvalidDocument when
  /// the vertex still has incident edges.
  void remove_vertex(const VertexId& id);

  bool has_vertex(const VertexId& id) const { return vertices_.contains(id); }
  bool has_edge(EdgeId id) const { return edges_.contains(id); }

  const std::string& label(const VertexId& id) const;
  const Endpoints& endpoints(EdgeId id) const;

  const std::map<VertexId, std::string>& vertices() const { return vertices_; }
  const std::map<EdgeId, Endpoints>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;

  /// Smallest id not yet used, i.e. max id + 1 (1 for an edgeless graph).
  EdgeId next_edge_id() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::map<VertexId, std::string> vertices_;
  std::map<EdgeId, Endpoints> edges_;
};

struct AddEdge {
  VertexId u;
  VertexId v;
  EdgeId id;
  friend bool operator==(const AddEdge&, const AddEdge&) = default;
};

struct RemoveEdge {
  EdgeId id;
  friend bool operator==(const RemoveEdge&, const RemoveEdge&) = default;
};

/// Demolish `id` and rebuild it between u and v under the same id.
struct MoveEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  friend bool operator==(const MoveEdge&, const MoveEdge&) = default;
};

using EdgeEdit = std::variant<AddEdge, RemoveEdge, MoveEdge>;

/// Returns a copy of `g` with the edit applied; `g` is untouched.
Multigraph apply_edit(const Multigraph& g, const EdgeEdit& edit);

}  // namespace coreo

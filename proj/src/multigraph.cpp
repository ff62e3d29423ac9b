#include "coreo/multigraph.hpp"

#include <algorithm>

#include "coreo/error.hpp"

namespace coreo {

Endpoints::Endpoints(VertexId a, VertexId b)
    : first(std::min(a, b)), second(std::max(a, b)) {}

void Multigraph::add_vertex(const VertexId& id, std::string label) {
  if (label.empty()) label = id.str();
  auto [it, inserted] = vertices_.emplace(id, std::move(label));
  if (!inserted) {
    throw EngineError(ErrorCode::DuplicateVertexId,
                      "duplicate vertex id " + id.str());
  }
}

void Multigraph::add_edge(EdgeId id, const VertexId& u, const VertexId& v) {
  for (const auto& end : {u, v}) {
    if (!has_vertex(end)) {
      throw EngineError(ErrorCode::UnknownVertex, "unknown vertex " + end.str());
    }
  }
  if (has_edge(id)) {
    throw EngineError(ErrorCode::DuplicateEdgeId,
                      "duplicate edge id " + std::to_string(id.value()));
  }
  edges_.emplace(id, Endpoints(u, v));
}

void Multigraph::remove_edge(EdgeId id) {
  if (edges_.erase(id) == 0) {
    throw EngineError(ErrorCode::UnknownEdge,
                      "unknown edge " + std::to_string(id.value()));
  }
}

void Multigraph::remove_vertex(const VertexId& id) {
  if (!has_vertex(id)) {
    throw EngineError(ErrorCode::UnknownVertex, "unknown vertex " + id.str());
  }
  for (const auto& [eid, ends] : edges_) {
    if (ends.touches(id)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "vertex " + id.str() + " still has edge " +
                            std::to_string(eid.value()));
    }
  }
  vertices_.erase(id);
}

const std::string& Multigraph::label(const VertexId& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) {
    throw EngineError(ErrorCode::UnknownVertex, "unknown vertex " + id.str());
  }
  return it->second;
}

const Endpoints& Multigraph::endpoints(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw EngineError(ErrorCode::UnknownEdge,
                      "unknown edge " + std::to_string(id.value()));
  }
  return it->second;
}

std::vector<VertexId> Multigraph::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [id, label] : vertices_) out.push_back(id);
  return out;
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [id, ends] : edges_) out.push_back(id);
  return out;
}

EdgeId Multigraph::next_edge_id() const {
  if (edges_.empty()) return EdgeId(1);
  return EdgeId(edges_.rbegin()->first.value() + 1);
}

Multigraph apply_edit(const Multigraph& g, const EdgeEdit& edit) {
  Multigraph out = g;
  std::visit(
      [&out](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, AddEdge>) {
          out.add_edge(e.id, e.u, e.v);
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          out.remove_edge(e.id);
        } else {
          if (!out.has_edge(e.id)) {
            throw EngineError(ErrorCode::UnknownEdge,
                              "unknown edge " + std::to_string(e.id.value()));
          }
          for (const auto& end : {e.u, e.v}) {
            if (!out.has_vertex(end)) {
              throw EngineError(ErrorCode::UnknownVertex,
                                "unknown vertex " + end.str());
            }
          }
          out.remove_edge(e.id);
          out.add_edge(e.id, e.u, e.v);
        }
      },
      edit);
  return out;
}

}  // namespace coreo

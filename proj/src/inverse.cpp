#include "coreo/inverse.hpp"

namespace coreo {

namespace {

std::vector<std::pair<VertexId, VertexId>> vertex_pairs(const Multigraph& g) {
  const auto ids = g.vertex_ids();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(ids.size() * (ids.size() + 1) / 2);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i; j < ids.size(); ++j) pairs.emplace_back(ids[i], ids[j]);
  }
  return pairs;
}

// Applies and re-classifies; `guard_connectivity` diverts results with a
// split edge support into the rejected list.
void consider(const Multigraph& g, const EdgeEdit& edit, EulerKind target,
              bool guard_connectivity, EditSearch& out) {
  const Multigraph edited = apply_edit(g, edit);
  ClassificationReport report = classify(edited);
  if (guard_connectivity && !report.connected) {
    out.rejected.push_back({edit, RejectReason::Disconnects});
    return;
  }
  if (report.kind() != target) return;
  out.proposals.push_back({edit, std::move(report.euler_type),
                           std::move(report.feasible_starts),
                           is_degenerate(g, edit)});
}

}  // namespace

bool is_degenerate(const Multigraph& g, const EdgeEdit& edit) {
  if (const auto* add = std::get_if<AddEdge>(&edit)) return add->u == add->v;
  if (const auto* move = std::get_if<MoveEdge>(&edit)) {
    return move->u == move->v ||
           (g.has_edge(move->id) &&
            g.endpoints(move->id) == Endpoints(move->u, move->v));
  }
  return false;
}

EditSearch single_additions(const Multigraph& g, EulerKind target) {
  EditSearch out;
  const EdgeId fresh = g.next_edge_id();
  for (const auto& [u, v] : vertex_pairs(g)) {
    consider(g, AddEdge{u, v, fresh}, target, false, out);
  }
  return out;
}

EditSearch single_removals(const Multigraph& g, EulerKind target) {
  EditSearch out;
  for (const auto& [id, ends] : g.edges()) {
    consider(g, RemoveEdge{id}, target, true, out);
  }
  return out;
}

EditSearch bridge_moves(const Multigraph& g, EulerKind target) {
  EditSearch out;
  const auto pairs = vertex_pairs(g);
  for (const auto& [id, ends] : g.edges()) {
    for (const auto& [u, v] : pairs) {
      consider(g, MoveEdge{id, u, v}, target, true, out);
    }
  }
  return out;
}

}  // namespace coreo

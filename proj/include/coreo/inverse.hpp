#pragma once

#include <set>
#include <vector>

#include "coreo/analysis.hpp"
#include "coreo/multigraph.hpp"

namespace coreo {

/// A single edit together with the classification it produces. Every
/// proposal returned by the searches below has been applied and
/// re-classified, never predicted from parity alone.
struct EditProposal {
  EdgeEdit edit;
  EulerType resulting_type;
  std::set<VertexId> resulting_feasible_starts;
  /// Adds or moves onto a loop, and moves that rebuild an edge where it was.
  bool degenerate = false;
};

enum class RejectReason { Disconnects };

struct RejectedEdit {
  EdgeEdit edit;
  RejectReason reason;
};

struct EditSearch {
  std::vector<EditProposal> proposals;
  /// Removals and moves left out because they split the edge support.
  std::vector<RejectedEdit> rejected;
};

/// Every unordered vertex pair (loops included) whose addition, under the
/// graph's next free edge id, yields `target`. Ordered by (u, v).
EditSearch single_additions(const Multigraph& g, EulerKind target);

/// Every edge whose removal yields `target` while keeping the edge support
/// connected. Ordered by edge id.
EditSearch single_removals(const Multigraph& g, EulerKind target);

/// Every demolish-and-rebuild (edge e moved onto u-v, same id) yielding
/// `target` with the edge support connected. Ordered by (e, u, v).
EditSearch bridge_moves(const Multigraph& g, EulerKind target);

bool is_degenerate(const Multigraph& g, const EdgeEdit& edit);

}  // namespace coreo

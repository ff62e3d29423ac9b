#include "coreo/trails.hpp"

#include <algorithm>
#include <utility>

#include "coreo/analysis.hpp"
#include "coreo/error.hpp"
#include "indexed_graph.hpp"

namespace coreo {

namespace {

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

}  // namespace

Trail find_trail(const Multigraph& g, const std::optional<VertexId>& start) {
  if (start && !g.has_vertex(*start)) {
    throw EngineError(ErrorCode::UnknownVertex,
                      "unknown start vertex " + start->str());
  }
  const ClassificationReport report = classify(g);
  if (report.kind() == EulerKind::III || report.feasible_starts.empty()) {
    throw EngineError(ErrorCode::NoTrail, "graph has no Eulerian trail");
  }
  const VertexId origin = start.value_or(*report.feasible_starts.begin());
  if (!report.feasible_starts.contains(origin)) {
    throw EngineError(ErrorCode::InfeasibleStart,
                      "no Eulerian trail starts at " + origin.str());
  }
  if (g.edge_count() == 0) return Trail::single(origin);

  const detail::IndexedGraph ig(g);
  std::vector<char> used(ig.edge_ids.size(), 0);
  std::vector<std::size_t> cursor(ig.vertex_ids.size(), 0);

  // Each stack entry is a vertex and the edge used to reach it.
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<std::pair<std::size_t, std::size_t>> finished;
  stack.reserve(ig.edge_ids.size() + 1);
  finished.reserve(ig.edge_ids.size() + 1);
  stack.emplace_back(ig.index_of(origin), kNoEdge);

  while (!stack.empty()) {
    const std::size_t v = stack.back().first;
    const auto& arcs = ig.adjacency[v];
    std::size_t& c = cursor[v];
    while (c < arcs.size() && used[arcs[c].edge]) ++c;
    if (c < arcs.size()) {
      used[arcs[c].edge] = 1;
      stack.emplace_back(arcs[c].to, arcs[c].edge);
    } else {
      finished.push_back(stack.back());
      stack.pop_back();
    }
  }

  Trail trail;
  trail.vertices.reserve(finished.size());
  trail.edges.reserve(finished.size() - 1);
  for (auto it = finished.rbegin(); it != finished.rend(); ++it) {
    trail.vertices.push_back(ig.vertex_ids[it->first]);
  }
  // finished[i] was reached from finished[i + 1] by its recorded edge.
  for (std::size_t i = finished.size() - 1; i-- > 0;) {
    trail.edges.push_back(ig.edge_ids[finished[i].second]);
  }
  return trail;
}

namespace {

class TrailEnumerator {
 public:
  TrailEnumerator(const detail::IndexedGraph& graph,
                  const EnumerateOptions& options, std::vector<Trail>& out)
      : graph_(graph),
        options_(options),
        out_(out),
        used_(graph.edge_ids.size(), 0) {}

  void run_from(std::size_t start) {
    vertex_path_.assign(1, start);
    edge_path_.clear();
    visit(start);
  }

  bool full() const { return out_.size() >= options_.max_results; }

 private:
  void visit(std::size_t v) {
    if (++expansions_ > options_.budget) {
      throw EngineError(ErrorCode::BudgetExceeded,
                        "trail enumeration exceeded " +
                            std::to_string(options_.budget) + " expansions");
    }
    if (edge_path_.size() == graph_.edge_ids.size()) {
      emit();
      return;
    }
    for (const auto& arc : graph_.adjacency[v]) {
      if (used_[arc.edge]) continue;
      used_[arc.edge] = 1;
      edge_path_.push_back(arc.edge);
      vertex_path_.push_back(arc.to);
      visit(arc.to);
      vertex_path_.pop_back();
      edge_path_.pop_back();
      used_[arc.edge] = 0;
      if (full()) return;
    }
  }

  void emit() {
    Trail t;
    t.vertices.reserve(vertex_path_.size());
    t.edges.reserve(edge_path_.size());
    for (std::size_t v : vertex_path_) t.vertices.push_back(graph_.vertex_ids[v]);
    for (std::size_t e : edge_path_) t.edges.push_back(graph_.edge_ids[e]);
    out_.push_back(std::move(t));
  }

  const detail::IndexedGraph& graph_;
  const EnumerateOptions& options_;
  std::vector<Trail>& out_;
  std::vector<char> used_;
  std::vector<std::size_t> vertex_path_;
  std::vector<std::size_t> edge_path_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

std::vector<Trail> enumerate_trails(const Multigraph& g,
                                    const EnumerateOptions& options) {
  if (options.budget == 0) {
    throw EngineError(ErrorCode::BudgetExceeded, "budget must be positive");
  }
  if (options.start && !g.has_vertex(*options.start)) {
    throw EngineError(ErrorCode::UnknownVertex,
                      "unknown start vertex " + options.start->str());
  }
  std::vector<Trail> out;
  if (options.max_results == 0) return out;

  const detail::IndexedGraph ig(g);
  TrailEnumerator search(ig, options, out);
  if (options.start) {
    search.run_from(ig.index_of(*options.start));
  } else {
    for (std::size_t v = 0; v < ig.vertex_ids.size() && !search.full(); ++v) {
      search.run_from(v);
    }
  }
  return out;
}

}  // namespace coreo

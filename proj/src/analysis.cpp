#include "coreo/analysis.hpp"

#include <numeric>
#include <vector>

#include "coreo/error.hpp"

namespace coreo {

std::size_t degree(const Multigraph& g, const VertexId& v) {
  if (!g.has_vertex(v)) {
    throw EngineError(ErrorCode::UnknownVertex, "unknown vertex " + v.str());
  }
  std::size_t d = 0;
  for (const auto& [id, ends] : g.edges()) {
    d += (ends.first == v) + (ends.second == v);
  }
  return d;
}

std::map<VertexId, std::size_t> degree_table(const Multigraph& g) {
  std::map<VertexId, std::size_t> table;
  for (const auto& [v, label] : g.vertices()) table.emplace(v, 0);
  for (const auto& [id, ends] : g.edges()) {
    ++table[ends.first];
    ++table[ends.second];
  }
  return table;
}

std::set<VertexId> odd_vertices(const Multigraph& g) {
  std::set<VertexId> odd;
  for (const auto& [v, d] : degree_table(g)) {
    if (d % 2 == 1) odd.insert(v);
  }
  return odd;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_edge_connected(const Multigraph& g) {
  if (g.edge_count() == 0) return true;
  std::map<VertexId, std::size_t> index;
  for (const auto& [v, label] : g.vertices()) index.emplace(v, index.size());
  DisjointSets sets(index.size());
  for (const auto& [id, ends] : g.edges()) {
    sets.unite(index.at(ends.first), index.at(ends.second));
  }
  const std::size_t root =
      sets.find(index.at(g.edges().begin()->second.first));
  for (const auto& [id, ends] : g.edges()) {
    if (sets.find(index.at(ends.first)) != root) return false;
  }
  return true;
}

EulerKind kind_of(const EulerType& t) {
  return static_cast<EulerKind>(t.index());
}

std::string to_string(EulerKind k) {
  switch (k) {
    case EulerKind::I: return "I";
    case EulerKind::II: return "II";
    case EulerKind::III: return "III";
  }
  return "?";
}

std::string to_string(NoTrailReason r) {
  return r == NoTrailReason::OddCount ? "OddCount" : "Disconnected";
}

ClassificationReport classify(const Multigraph& g) {
  ClassificationReport report{TypeI{}, {}, degree_table(g), {}, true, false};
  for (const auto& [v, d] : report.degree_table) {
    if (d % 2 == 1) report.odd_vertices.insert(v);
  }
  report.connected = is_edge_connected(g);
  const std::size_t odd = report.odd_vertices.size();

  if (!report.connected) {
    report.euler_type = TypeIII{NoTrailReason::Disconnected, odd};
  } else if (odd == 0) {
    report.euler_type = TypeI{};
    report.degenerate = g.edge_count() == 0;
    for (const auto& [v, d] : report.degree_table) {
      if (d > 0 || report.degenerate) report.feasible_starts.insert(v);
    }
  } else if (odd == 2) {
    report.euler_type = TypeII{*report.odd_vertices.begin(),
                               *report.odd_vertices.rbegin()};
    report.feasible_starts = report.odd_vertices;
  } else {
    report.euler_type = TypeIII{NoTrailReason::OddCount, odd};
  }
  return report;
}

std::set<VertexId> feasible_starts(const Multigraph& g) {
  return classify(g).feasible_starts;
}

}  // namespace coreo

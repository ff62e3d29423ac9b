#include "coreo/maps.hpp"

#include <cstdint>

#include "coreo/error.hpp"

namespace coreo {

void MapInstance::add_region(const VertexId& id, Region region) {
  if (region.label.empty()) region.label = id.str();
  if (!regions_.emplace(id, std::move(region)).second) {
    throw EngineError(ErrorCode::DuplicateVertexId,
                      "duplicate region id " + id.str());
  }
}

void MapInstance::add_bridge(EdgeId id, const VertexId& a, const VertexId& b) {
  for (const auto& end : {a, b}) {
    if (!regions_.contains(end)) {
      throw EngineError(ErrorCode::UnknownVertex, "unknown region " + end.str());
    }
  }
  if (!bridges_.emplace(id, Endpoints(a, b)).second) {
    throw EngineError(ErrorCode::DuplicateEdgeId,
                      "duplicate bridge id " + std::to_string(id.value()));
  }
}

void MapInstance::remove_bridge(EdgeId id) {
  if (bridges_.erase(id) == 0) {
    throw EngineError(ErrorCode::UnknownEdge,
                      "unknown bridge " + std::to_string(id.value()));
  }
}

void MapInstance::remove_region(const VertexId& id) {
  if (!regions_.contains(id)) {
    throw EngineError(ErrorCode::UnknownVertex, "unknown region " + id.str());
  }
  for (const auto& [bid, ends] : bridges_) {
    if (ends.touches(id)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "region " + id.str() + " still has bridge " +
                            std::to_string(bid.value()));
    }
  }
  regions_.erase(id);
}

MapInstance apply_edit(const MapInstance& m, const EdgeEdit& edit) {
  // Validate against the graph image first so errors match graph edits.
  const Multigraph edited = apply_edit(map_to_graph(m), edit);
  MapInstance out = m;
  for (const auto& [id, ends] : m.bridges()) {
    if (!edited.has_edge(id) || edited.endpoints(id) != ends) out.remove_bridge(id);
  }
  for (const auto& [id, ends] : edited.edges()) {
    if (!out.bridges().contains(id)) out.add_bridge(id, ends.first, ends.second);
  }
  return out;
}

Multigraph map_to_graph(const MapInstance& m) {
  Multigraph g;
  for (const auto& [id, region] : m.regions()) g.add_vertex(id, region.label);
  for (const auto& [id, ends] : m.bridges()) g.add_edge(id, ends.first, ends.second);
  return g;
}

std::vector<std::string> itinerary(const Trail& t, const MapInstance& m) {
  auto name = [&m](const VertexId& v) {
    auto it = m.regions().find(v);
    if (it == m.regions().end()) {
      throw EngineError(ErrorCode::UnknownVertex, "unknown region " + v.str());
    }
    return it->second.label == v.str() ? v.str()
                                        : it->second.label + " (" + v.str() + ")";
  };
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto it = m.bridges().find(t.edges[i]);
    if (it == m.bridges().end() ||
        it->second != Endpoints(t.vertices[i], t.vertices[i + 1])) {
      throw EngineError(ErrorCode::UnknownEdge,
                        "bridge " + std::to_string(t.edges[i].value()) +
                            " does not join " + t.vertices[i].str() + " and " +
                            t.vertices[i + 1].str());
    }
    lines.push_back(name(t.vertices[i]) + " -> bridge " +
                    std::to_string(t.edges[i].value()) + " -> " +
                    name(t.vertices[i + 1]));
  }
  return lines;
}

namespace {

struct RegionSpec {
  const char* id;
  const char* label;
  std::vector<Point> polygon;
};

struct BridgeSpec {
  std::uint32_t id;
  const char* a;
  const char* b;
};

MapInstance build(std::string name, const std::vector<RegionSpec>& regions,
                  const std::vector<BridgeSpec>& bridges) {
  MapInstance m(std::move(name));
  for (const auto& r : regions) {
    m.add_region(VertexId(r.id), Region{r.label, r.polygon});
  }
  for (const auto& b : bridges) {
    m.add_bridge(EdgeId(b.id), VertexId(b.a), VertexId(b.b));
  }
  return m;
}

Point P(double x, double y) { return Point{x, y}; }

// A is the central island; B and C the north and south banks; D the eastern
// land between the two river arms.
MapInstance koenigsberg() {
  return build("koenigsberg",
               {{"A", "Kneiphof", {P(3, 3.5), P(6, 3.5), P(6, 5), P(3, 5)}},
                {"B", "Altstadt", {P(0, 0), P(12, 0), P(12, 2.5), P(0, 2.5)}},
                {"C", "Vorstadt", {P(0, 6), P(12, 6), P(12, 8.5), P(0, 8.5)}},
                {"D", "Lomse", {P(8, 3), P(12, 3), P(12, 5.5), P(8, 5.5)}}},
               {{1, "A", "B"}, {2, "A", "B"}, {3, "A", "C"}, {4, "A", "C"},
                {5, "A", "D"}, {6, "B", "D"}, {7, "C", "D"}});
}

// Left/right mirror image: A,B on the left bank mirror E,F on the right;
// the central islands C and D carry the odd bridge counts.
MapInstance mathigon2() {
  return build("mathigon2",
               {{"A", "A", {}}, {"B", "B", {}}, {"C", "C", {}},
                {"D", "D", {}}, {"E", "E", {}}, {"F", "F", {}}},
               {{1, "A", "B"}, {2, "A", "C"}, {3, "B", "C"}, {4, "C", "D"},
                {5, "D", "E"}, {6, "D", "F"}, {7, "E", "F"}});
}

// Bridges numbered left to right so that A1D6C5B4A3B2A is a circuit.
MapInstance fig2_bottom_left() {
  return build("fig2_bottom_left",
               {{"A", "A", {}}, {"B", "B", {}}, {"C", "C", {}}, {"D", "D", {}}},
               {{1, "A", "D"}, {2, "A", "B"}, {3, "A", "B"}, {4, "A", "B"},
                {5, "B", "C"}, {6, "C", "D"}});
}

// Two triangles sharing C, with the A-B crossing doubled twice over.
MapInstance fig2_bottom_right() {
  return build("fig2_bottom_right",
               {{"A", "A", {}}, {"B", "B", {}}, {"C", "C", {}},
                {"D", "D", {}}, {"E", "E", {}}},
               {{1, "A", "B"}, {2, "B", "C"}, {3, "C", "A"}, {4, "C", "D"},
                {5, "D", "E"}, {6, "E", "C"}, {7, "A", "B"}, {8, "A", "B"}});
}

// Ring of six regions with chords; A, D, E and F have odd bridge counts.
MapInstance leiden() {
  return build("leiden",
               {{"A", "A", {}}, {"B", "B", {}}, {"C", "C", {}},
                {"D", "D", {}}, {"E", "E", {}}, {"F", "F", {}}},
               {{1, "A", "B"}, {2, "B", "C"}, {3, "C", "D"}, {4, "D", "E"},
                {5, "E", "F"}, {6, "F", "A"}, {7, "A", "C"}, {8, "C", "E"},
                {9, "B", "D"}, {10, "F", "B"}});
}

}  // namespace

MapInstance builtin_map(std::string_view name) {
  if (name == "koenigsberg") return koenigsberg();
  if (name == "mathigon2") return mathigon2();
  if (name == "fig2_bottom_left") return fig2_bottom_left();
  if (name == "fig2_bottom_right") return fig2_bottom_right();
  if (name == "leiden") return leiden();
  throw EngineError(ErrorCode::UnknownName,
                    "no builtin map named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_map_names() {
  return {"koenigsberg", "mathigon2", "fig2_bottom_left", "fig2_bottom_right",
          "leiden"};
}

}  // namespace coreo

#include "coreo/choreography.hpp"

#include <cstdint>

#include "coreo/error.hpp"

namespace coreo {

void check_schema(const Schema& s) {
  for (const auto& [v, label] : s.graph.vertices()) {
    if (!s.positions.contains(v)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "position " + v.str() + " has no floor coordinate");
    }
  }
  for (const auto& [v, p] : s.positions) {
    if (!s.graph.has_vertex(v)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "coordinate given for unknown position " + v.str());
    }
  }
  for (const auto& [e, ends] : s.graph.edges()) {
    if (!s.styles.contains(e)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "step " + std::to_string(e.value()) + " has no style");
    }
  }
  for (const auto& [e, style] : s.styles) {
    if (!s.graph.has_edge(e)) {
      throw EngineError(ErrorCode::InvalidDocument,
                        "style given for unknown step " +
                            std::to_string(e.value()));
    }
  }
}

Schema apply_edit(const Schema& s, const EdgeEdit& edit) {
  Schema out = s;
  out.graph = apply_edit(s.graph, edit);
  if (const auto* add = std::get_if<AddEdge>(&edit)) {
    out.styles.emplace(add->id, std::string(kDefaultStepStyle));
  } else if (const auto* rm = std::get_if<RemoveEdge>(&edit)) {
    out.styles.erase(rm->id);
  }
  return out;
}

Choreography choreograph(const Schema& s, const std::optional<VertexId>& start,
                         std::size_t beats_per_step) {
  if (beats_per_step == 0) {
    throw EngineError(ErrorCode::InvalidArgument,
                      "beats per step must be at least 1");
  }
  Choreography c;
  c.trail = find_trail(s.graph, start);
  c.styles.reserve(c.trail.edges.size());
  c.beats.reserve(c.trail.edges.size());
  for (std::size_t i = 0; i < c.trail.edges.size(); ++i) {
    auto it = s.styles.find(c.trail.edges[i]);
    c.styles.push_back(it != s.styles.end() ? it->second
                                            : std::string(kDefaultStepStyle));
    c.beats.push_back(i * beats_per_step);
  }
  return c;
}

ChoreographyReport validate_choreography(const Choreography& c,
                                         const Schema& s) {
  ChoreographyReport report;
  report.trail = validate_trail(c.trail, s.graph);
  const std::size_t steps = c.trail.edges.size();
  report.length_mismatch = c.styles.size() != steps || c.beats.size() != steps;

  for (std::size_t i = 0; i < std::min(steps, c.styles.size()); ++i) {
    auto it = s.styles.find(c.trail.edges[i]);
    if (it != s.styles.end() && it->second != c.styles[i]) {
      report.style_mismatches.push_back(i);
    }
  }
  if (!c.beats.empty() && c.beats.front() != 0) report.beat_order = true;
  for (std::size_t i = 1; i < c.beats.size(); ++i) {
    if (c.beats[i] <= c.beats[i - 1]) report.beat_order = true;
  }
  return report;
}

std::vector<std::string> ChoreographyReport::describe() const {
  std::vector<std::string> out;
  for (const auto& v : trail.violations) out.push_back(coreo::describe(v));
  for (std::size_t i : style_mismatches) {
    out.push_back("StyleMismatch(" + std::to_string(i) + ")");
  }
  if (beat_order) out.emplace_back("BeatOrder");
  if (length_mismatch) out.emplace_back("LengthMismatch");
  return out;
}

namespace {

struct PositionSpec {
  const char* id;
  double x;
  double y;
};

struct StepSpec {
  std::uint32_t id;
  const char* a;
  const char* b;
  const char* style;
};

Schema build(const std::vector<PositionSpec>& positions,
             const std::vector<StepSpec>& steps) {
  Schema s;
  for (const auto& p : positions) {
    s.graph.add_vertex(VertexId(p.id));
    s.positions.emplace(VertexId(p.id), Point{p.x, p.y});
  }
  for (const auto& st : steps) {
    s.graph.add_edge(EdgeId(st.id), VertexId(st.a), VertexId(st.b));
    s.styles.emplace(EdgeId(st.id), st.style);
  }
  return s;
}

// Pentagon floor plan shared by the dance schemas.
const std::vector<PositionSpec> kPentagon = {
    {"A", 0, -2}, {"B", 1.9, -0.6}, {"C", 1.2, 1.6}, {"D", -1.2, 1.6},
    {"E", -1.9, -0.6}};

// Pentagon with the B-E chord; B and E are the odd positions.
Schema gc1() {
  return build(kPentagon, {{1, "A", "B", "walk"},
                           {2, "B", "C", "slide"},
                           {3, "C", "D", "turn"},
                           {4, "D", "E", "jump"},
                           {5, "E", "A", "walk"},
                           {6, "B", "E", "spin"}});
}

// Pentagon plus the triangle B-C-E: every position even.
Schema gc2() {
  return build(kPentagon, {{1, "A", "B", "walk"},
                           {2, "B", "C", "slide"},
                           {3, "C", "D", "turn"},
                           {4, "D", "E", "jump"},
                           {5, "E", "A", "walk"},
                           {6, "B", "E", "spin"},
                           {7, "E", "C", "hop"},
                           {8, "C", "B", "clap"}});
}

// Four-cycle A-C-B-D with the C-D chord, and E hanging off A and B; four
// odd positions.
Schema gc3() {
  return build(kPentagon, {{1, "A", "C", "walk"},
                           {2, "A", "D", "slide"},
                           {3, "B", "C", "turn"},
                           {4, "B", "D", "jump"},
                           {5, "C", "D", "spin"},
                           {6, "A", "E", "walk"},
                           {7, "E", "B", "hop"}});
}

// The bridges of Koenigsberg as a worksheet graph.
Schema g1() {
  return build({{"A", 1, 1}, {"B", 1, 0}, {"C", 1, 2}, {"D", 2, 1}},
               {{1, "A", "B", "-"}, {2, "A", "B", "-"}, {3, "A", "C", "-"},
                {4, "A", "C", "-"}, {5, "A", "D", "-"}, {6, "B", "D", "-"},
                {7, "C", "D", "-"}});
}

// The house drawn without lifting the pen: square A,B,C,D (A,B on the
// ground), both diagonals, roof apex E.
Schema g2() {
  return build({{"A", 0, 2}, {"B", 2, 2}, {"C", 2, 0}, {"D", 0, 0}, {"E", 1, -1}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "D", "-"},
                {4, "D", "A", "-"}, {5, "A", "C", "-"}, {6, "B", "D", "-"},
                {7, "C", "E", "-"}, {8, "E", "D", "-"}});
}

// Bowtie with an A-D crossbar; A and D odd.
Schema g3() {
  return build({{"A", 0, 0}, {"B", 0, 2}, {"C", 1, 1}, {"D", 2, 0}, {"E", 2, 2}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "A", "-"},
                {4, "C", "D", "-"}, {5, "D", "E", "-"}, {6, "E", "C", "-"},
                {7, "A", "D", "-"}});
}

// Complete graph on five vertices; every degree is 4.
Schema g4() {
  return build({{"A", 0, -2}, {"B", 1.9, -0.6}, {"C", 1.2, 1.6},
                {"D", -1.2, 1.6}, {"E", -1.9, -0.6}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "D", "-"},
                {4, "D", "E", "-"}, {5, "E", "A", "-"}, {6, "A", "C", "-"},
                {7, "C", "E", "-"}, {8, "E", "B", "-"}, {9, "B", "D", "-"},
                {10, "D", "A", "-"}});
}

// Star with four leaves.
Schema g5() {
  return build({{"A", 1, 1}, {"B", 1, 0}, {"C", 2, 1}, {"D", 1, 2}, {"E", 0, 1}},
               {{1, "A", "B", "-"}, {2, "A", "C", "-"}, {3, "A", "D", "-"},
                {4, "A", "E", "-"}});
}

// Triangular prism: six vertices of degree 3.
Schema g6() {
  return build({{"A", 0, 0}, {"B", 2, 0}, {"C", 1, 1.5}, {"D", 0, 3},
                {"E", 2, 3}, {"F", 1, 4.5}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "A", "-"},
                {4, "D", "E", "-"}, {5, "E", "F", "-"}, {6, "F", "D", "-"},
                {7, "A", "D", "-"}, {8, "B", "E", "-"}, {9, "C", "F", "-"}});
}

// Four vertices, one triangle.
Schema c1() {
  return build({{"A", 0, 0}, {"B", 2, 0}, {"C", 1, 1.5}, {"D", 1, 3}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "A", "-"},
                {4, "C", "D", "-"}});
}

// A 4-cycle with a pendant vertex: a cycle but no triangle.
Schema c2() {
  return build({{"A", 0, 0}, {"B", 2, 0}, {"C", 2, 2}, {"D", 0, 2}, {"E", -1, -1}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "D", "-"},
                {4, "D", "A", "-"}, {5, "A", "E", "-"}});
}

// A path: no cycle at all.
Schema c3() {
  return build({{"A", 0, 0}, {"B", 1, 0}, {"C", 2, 0}, {"D", 3, 0}},
               {{1, "A", "B", "-"}, {2, "B", "C", "-"}, {3, "C", "D", "-"}});
}

}  // namespace

Schema builtin_schema(std::string_view name) {
  if (name == "GC1") return gc1();
  if (name == "GC2") return gc2();
  if (name == "GC3") return gc3();
  if (name == "G1") return g1();
  if (name == "G2") return g2();
  if (name == "G3") return g3();
  if (name == "G4") return g4();
  if (name == "G5") return g5();
  if (name == "G6") return g6();
  if (name == "C1") return c1();
  if (name == "C2") return c2();
  if (name == "C3") return c3();
  throw EngineError(ErrorCode::UnknownName,
                    "no builtin schema named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_schema_names() {
  return {"GC1", "GC2", "GC3", "G1", "G2", "G3",
          "G4",  "G5",  "G6",  "C1", "C2", "C3"};
}

}  // namespace coreo

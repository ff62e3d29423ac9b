#include "coreo/json_io.hpp"

#include <cmath>
#include <numbers>

#include "coreo/error.hpp"

namespace coreo {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw EngineError(ErrorCode::InvalidDocument, why);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    invalid(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

VertexId vertex_from_json(const Json& j) {
  if (!j.is_string()) invalid("vertex ids must be strings");
  const auto& s = j.get_ref<const std::string&>();
  if (!VertexId::is_valid(s)) invalid("vertex id must be uppercase letters: '" + s + "'");
  return VertexId(s);
}

EdgeId edge_from_json(const Json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > 0 &&
      j.get<std::uint64_t>() <= UINT32_MAX) {
    return EdgeId(j.get<std::uint32_t>());
  }
  if (j.is_number_integer() && j.get<std::int64_t>() > 0 &&
      j.get<std::int64_t>() <= UINT32_MAX) {
    return EdgeId(static_cast<std::uint32_t>(j.get<std::int64_t>()));
  }
  invalid("edge ids must be positive integers, got " + j.dump());
}

EdgeId edge_from_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(key, &used);
    if (used == key.size() && value > 0 && value <= UINT32_MAX && key[0] != '0') {
      return EdgeId(static_cast<std::uint32_t>(value));
    }
  } catch (const std::logic_error&) {
  }
  invalid("edge key must be a positive integer: '" + key + "'");
}

std::pair<VertexId, VertexId> ends_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) invalid("edge ends must be a pair");
  return {vertex_from_json(j[0]), vertex_from_json(j[1])};
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid("coordinates must be [x, y]");
  }
  return Point{j[0].get<double>(), j[1].get<double>()};
}

Json point_to_json(const Point& p) { return Json::array({p.x, p.y}); }

Json vertices_to_json(const std::set<VertexId>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const EngineError& e) {
    if (e.code() == ErrorCode::InvalidDocument) throw;
    invalid(e.what());
  } catch (const Json::exception& e) {
    invalid(e.what());
  }
}

}  // namespace

VertexId vertex_id_from_json(const Json& j) { return vertex_from_json(j); }
EdgeId edge_id_from_json(const Json& j) { return edge_from_json(j); }

Json to_json(const Multigraph& g) {
  Json vertices = Json::array();
  for (const auto& [id, label] : g.vertices()) {
    vertices.push_back({{"id", id.str()}, {"label", label}});
  }
  Json edges = Json::array();
  for (const auto& [id, ends] : g.edges()) {
    edges.push_back({{"id", id.value()},
                     {"ends", Json::array({ends.first.str(), ends.second.str()})}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const Json& j) {
  return guarded([&] {
    Multigraph g;
    for (const auto& v : field(j, "vertices")) {
      std::string label = v.contains("label") ? v.at("label").get<std::string>() : "";
      g.add_vertex(vertex_from_json(field(v, "id")), std::move(label));
    }
    for (const auto& e : field(j, "edges")) {
      auto [a, b] = ends_from_json(field(e, "ends"));
      g.add_edge(edge_from_json(field(e, "id")), a, b);
    }
    return g;
  });
}

Json to_json(const MapInstance& m) {
  Json regions = Json::array();
  for (const auto& [id, r] : m.regions()) {
    Json entry = {{"id", id.str()}, {"label", r.label}};
    if (!r.polygon.empty()) {
      Json poly = Json::array();
      for (const auto& p : r.polygon) poly.push_back(point_to_json(p));
      entry["polygon"] = std::move(poly);
    }
    regions.push_back(std::move(entry));
  }
  Json bridges = Json::array();
  for (const auto& [id, ends] : m.bridges()) {
    bridges.push_back({{"id", id.value()},
                       {"ends", Json::array({ends.first.str(), ends.second.str()})}});
  }
  return {{"name", m.name()},
          {"regions", std::move(regions)},
          {"bridges", std::move(bridges)}};
}

MapInstance map_from_json(const Json& j) {
  return guarded([&] {
    MapInstance m(j.contains("name") ? j.at("name").get<std::string>() : "");
    for (const auto& r : field(j, "regions")) {
      Region region;
      if (r.contains("label")) region.label = r.at("label").get<std::string>();
      if (r.contains("polygon")) {
        for (const auto& p : r.at("polygon")) region.polygon.push_back(point_from_json(p));
      }
      m.add_region(vertex_from_json(field(r, "id")), std::move(region));
    }
    for (const auto& b : field(j, "bridges")) {
      auto [x, y] = ends_from_json(field(b, "ends"));
      m.add_bridge(edge_from_json(field(b, "id")), x, y);
    }
    return m;
  });
}

Json to_json(const Schema& s) {
  Json out = to_json(s.graph);
  Json positions = Json::object();
  for (const auto& [v, p] : s.positions) positions[v.str()] = point_to_json(p);
  Json styles = Json::object();
  for (const auto& [e, label] : s.styles) styles[std::to_string(e.value())] = label;
  out["positions"] = std::move(positions);
  out["styles"] = std::move(styles);
  return out;
}

Schema schema_from_json(const Json& j) {
  return guarded([&] {
    Schema s;
    s.graph = graph_from_json(j);
    for (const auto& [key, value] : field(j, "positions").items()) {
      s.positions.emplace(vertex_from_json(Json(key)), point_from_json(value));
    }
    for (const auto& [key, value] : field(j, "styles").items()) {
      s.styles.emplace(edge_from_key(key), value.get<std::string>());
    }
    check_schema(s);
    return s;
  });
}

Schema schema_from_graph(const Multigraph& g) {
  Schema s;
  s.graph = g;
  const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 1));
  std::size_t i = 0;
  for (const auto& [v, label] : g.vertices()) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(i++) / n;
    s.positions.emplace(v, Point{std::round(1000 * std::cos(angle)) / 1000,
                                 std::round(1000 * std::sin(angle)) / 1000});
  }
  for (const auto& [e, ends] : g.edges()) {
    s.styles.emplace(e, std::string(kDefaultStepStyle));
  }
  return s;
}

Json to_json(const Choreography& c) {
  return {{"trail", render_trail(c.trail)}, {"styles", c.styles}, {"beats", c.beats}};
}

Choreography choreography_from_json(const Json& j) {
  return guarded([&] {
    Choreography c;
    try {
      c.trail = parse_trail(field(j, "trail").get<std::string>());
    } catch (const EngineError& e) {
      invalid(e.what());
    }
    c.styles = field(j, "styles").get<std::vector<std::string>>();
    c.beats = field(j, "beats").get<std::vector<std::size_t>>();
    return c;
  });
}

Json to_json(const ClassificationReport& r) {
  Json out = {{"type", to_string(r.kind())},
              {"odd", vertices_to_json(r.odd_vertices)},
              {"feasible_starts", vertices_to_json(r.feasible_starts)},
              {"connected", r.connected},
              {"degenerate", r.degenerate}};
  Json degrees = Json::object();
  for (const auto& [v, d] : r.degree_table) degrees[v.str()] = d;
  out["degrees"] = std::move(degrees);
  if (const auto* two = std::get_if<TypeII>(&r.euler_type)) {
    out["endpoints"] = Json::array({two->first.str(), two->second.str()});
  }
  if (const auto* three = std::get_if<TypeIII>(&r.euler_type)) {
    out["reason"] = to_string(three->reason);
  }
  return out;
}

Json to_json(const TrailReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    std::visit(
        [&violations](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, violation::BadShape>) {
            violations.push_back({{"kind", "BadShape"}});
          } else if constexpr (std::is_same_v<T, violation::UnknownVertex>) {
            violations.push_back({{"kind", "UnknownVertex"},
                                  {"position", x.position},
                                  {"vertex", x.vertex.str()}});
          } else if constexpr (std::is_same_v<T, violation::UnknownEdge>) {
            violations.push_back(
                {{"kind", "UnknownEdge"}, {"step", x.step}, {"edge", x.edge.value()}});
          } else if constexpr (std::is_same_v<T, violation::WrongEndpoints>) {
            violations.push_back({{"kind", "WrongEndpoints"}, {"step", x.step}});
          } else if constexpr (std::is_same_v<T, violation::RepeatedEdge>) {
            violations.push_back({{"kind", "RepeatedEdge"}, {"edge", x.edge.value()}});
          } else {
            Json edges = Json::array();
            for (const auto& e : x.edges) edges.push_back(e.value());
            violations.push_back({{"kind", "MissingEdges"}, {"edges", std::move(edges)}});
          }
        },
        v);
  }
  return {{"status", to_string(r.status)},
          {"is_circuit", r.is_circuit},
          {"violations", std::move(violations)}};
}

Json to_json(const ChoreographyReport& r) {
  return {{"valid", r.valid()},
          {"trail", to_json(r.trail)},
          {"style_mismatches", r.style_mismatches},
          {"beat_order", r.beat_order},
          {"length_mismatch", r.length_mismatch}};
}

Json to_json(const EdgeEdit& e) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AddEdge>) {
          return {{"kind", "add"},
                  {"add", Json::array({x.u.str(), x.v.str()})},
                  {"id", x.id.value()}};
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          return {{"kind", "remove"}, {"remove", x.id.value()}};
        } else {
          return {{"kind", "move"},
                  {"remove", x.id.value()},
                  {"add", Json::array({x.u.str(), x.v.str()})}};
        }
      },
      e);
}

EdgeEdit edit_from_json(const Json& j, const Multigraph& context) {
  return guarded([&]() -> EdgeEdit {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "add") {
      auto [u, v] = ends_from_json(field(j, "add"));
      const EdgeId id =
          j.contains("id") ? edge_from_json(j.at("id")) : context.next_edge_id();
      return AddEdge{u, v, id};
    }
    if (kind == "remove") return RemoveEdge{edge_from_json(field(j, "remove"))};
    if (kind == "move") {
      auto [u, v] = ends_from_json(field(j, "add"));
      return MoveEdge{edge_from_json(field(j, "remove")), u, v};
    }
    invalid("unknown edit kind '" + kind + "'");
  });
}

Json to_json(const EditProposal& p) {
  return {{"edit", to_json(p.edit)},
          {"resulting_type", to_string(kind_of(p.resulting_type))},
          {"resulting_feasible_starts", vertices_to_json(p.resulting_feasible_starts)},
          {"degenerate", p.degenerate}};
}

Json to_json(const RejectedEdit& r) {
  return {{"edit", to_json(r.edit)}, {"reason", "Disconnects"}};
}

Json to_json(const EditSearch& s) {
  Json proposals = Json::array();
  for (const auto& p : s.proposals) proposals.push_back(to_json(p));
  Json rejected = Json::array();
  for (const auto& r : s.rejected) rejected.push_back(to_json(r));
  return {{"count", s.proposals.size()},
          {"proposals", std::move(proposals)},
          {"rejected", std::move(rejected)}};
}

std::string describe(const EdgeEdit& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AddEdge>) {
          return "add " + x.u.str() + "-" + x.v.str() + " as " +
                 std::to_string(x.id.value());
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          return "remove " + std::to_string(x.id.value());
        } else {
          return "move " + std::to_string(x.id.value()) + " to " + x.u.str() +
                 "-" + x.v.str();
        }
      },
      e);
}

InputDocument document_from_json(const Json& j) {
  if (!j.is_object()) invalid("document must be a JSON object");
  if (j.contains("regions")) return map_from_json(j);
  if (j.contains("positions") || j.contains("styles")) return schema_from_json(j);
  return graph_from_json(j);
}

Multigraph graph_of(const InputDocument& d) {
  return std::visit(
      [](const auto& x) -> Multigraph {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Multigraph>) {
          return x;
        } else if constexpr (std::is_same_v<T, MapInstance>) {
          return map_to_graph(x);
        } else {
          return x.graph;
        }
      },
      d);
}

EulerKind euler_kind_from_string(const std::string& s) {
  if (s == "I") return EulerKind::I;
  if (s == "II") return EulerKind::II;
  if (s == "III") return EulerKind::III;
  throw EngineError(ErrorCode::InvalidArgument,
                    "target must be I, II or III, got '" + s + "'");
}

}  // namespace coreo

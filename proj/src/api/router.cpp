#include <sstream>

#include "coreo/analysis.hpp"
#include "coreo/api.hpp"
#include "coreo/error.hpp"
#include "coreo/inverse.hpp"
#include "coreo/trails.hpp"

namespace coreo::api {

namespace {

constexpr const char* kAtlasPrefix = "atlas:";

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream in(path);
  std::string part;
  while (std::getline(in, part, '/')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

Json parse_body(const Request& r, bool required) {
  if (r.body.empty()) {
    if (required) throw ApiError(400, "InvalidDocument", "request body is empty");
    return Json::object();
  }
  try {
    return Json::parse(r.body);
  } catch (const Json::exception& e) {
    throw ApiError(400, "InvalidDocument", std::string("bad JSON: ") + e.what());
  }
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDocument:
    case ErrorCode::Malformed:
    case ErrorCode::InvalidId:
      return 400;
    case ErrorCode::UnknownName:
      return 404;
    default:
      return 422;
  }
}

Json error_body(const std::string& code, const std::string& reason) {
  return {{"code", code}, {"reason", reason}};
}

Payload payload_from_json(const Json& j) {
  InputDocument d = document_from_json(j);
  if (auto* m = std::get_if<MapInstance>(&d)) return std::move(*m);
  if (auto* s = std::get_if<Schema>(&d)) return std::move(*s);
  return schema_from_graph(std::get<Multigraph>(d));
}

std::optional<Payload> atlas_payload(const std::string& name) {
  for (const auto& n : builtin_map_names()) {
    if (n == name) return Payload(builtin_map(name));
  }
  for (const auto& n : builtin_schema_names()) {
    if (n == name) return Payload(builtin_schema(name));
  }
  return std::nullopt;
}

Json document_json(const Document& d) {
  return {{"doc_id", d.id},
          {"revision", d.revision},
          {"read_only", d.read_only},
          {"kind", std::holds_alternative<Schema>(d.payload) ? "schema" : "map"},
          {"payload", std::visit([](const auto& x) { return to_json(x); }, d.payload)}};
}

Json classification_json(const Document& d) {
  Json out = to_json(classify(graph_of(d.payload)));
  out["doc_id"] = d.id;
  out["revision"] = d.revision;
  return out;
}

std::uint64_t revision_field(const Json& body) {
  if (!body.contains("revision") || !body.at("revision").is_number_unsigned()) {
    throw ApiError(400, "InvalidDocument", "body must carry an unsigned 'revision'");
  }
  return body.at("revision").get<std::uint64_t>();
}

}  // namespace

Service::Service(ServiceOptions options) : options_(options) {
  for (const auto& name : builtin_map_names()) {
    store_.create(builtin_map(name), options_.atlas_readonly, kAtlasPrefix + name);
  }
  for (const auto& name : builtin_schema_names()) {
    store_.create(builtin_schema(name), options_.atlas_readonly, kAtlasPrefix + name);
  }
}

Response Service::handle(const Request& r) {
  try {
    const auto parts = split_path(r.path);
    const std::string& m = r.method;
    if (parts.size() == 1 && parts[0] == "docs" && m == "POST") return create_doc(r);
    if (parts.size() == 2 && parts[0] == "docs") {
      if (m == "GET") return get_doc(parts[1]);
      if (m == "PATCH") return patch_doc(parts[1], r);
    }
    if (parts.size() == 3 && parts[0] == "docs") {
      if (parts[2] == "classification" && m == "GET") return classification(parts[1]);
      if (parts[2] == "trails" && m == "POST") return trails(parts[1], r);
      if (parts[2] == "edits" && m == "POST") return edits(parts[1], r);
    }
    if (parts.size() == 1 && parts[0] == "atlas" && m == "GET") return atlas_index();
    if (parts.size() == 2 && parts[0] == "atlas" && m == "GET") return atlas_entry(parts[1]);
    if (parts.size() == 1 && parts[0] == "validate" && m == "POST") return validate(r);
    return {404, error_body("NotFound", m + " " + r.path + " is not an endpoint")};
  } catch (const ApiError& e) {
    return {e.status(), error_body(e.code(), e.what())};
  } catch (const EngineError& e) {
    return {status_for(e.code()), error_body(std::string(to_string(e.code())), e.what())};
  }
}

Response Service::create_doc(const Request& r) {
  const Json body = parse_body(r, true);
  Payload payload = [&]() -> Payload {
    if (body.is_object() && body.contains("atlas")) {
      const std::string name = body.at("atlas").is_string()
                                   ? body.at("atlas").get<std::string>()
                                   : std::string();
      auto p = atlas_payload(name);
      if (!p) throw ApiError(404, "UnknownName", "no atlas entry '" + name + "'");
      return std::move(*p);
    }
    return payload_from_json(body);
  }();
  const std::string id = store_.create(std::move(payload));
  return {201, {{"doc_id", id}, {"revision", 1}}};
}

Response Service::get_doc(const std::string& id) {
  return {200, document_json(store_.get(id))};
}

Response Service::patch_doc(const std::string& id, const Request& r) {
  const Json body = parse_body(r, true);
  const std::uint64_t revision = revision_field(body);
  if (!body.contains("edit")) {
    throw ApiError(400, "InvalidDocument", "body must carry an 'edit'");
  }
  const Document current = store_.get(id);
  const DocumentEdit edit = document_edit_from_json(body.at("edit"), current.payload);
  const Document updated = store_.mutate(id, revision, edit);
  return {200,
          {{"doc_id", updated.id},
           {"revision", updated.revision},
           {"classification", classification_json(updated)}}};
}

Response Service::classification(const std::string& id) {
  return {200, classification_json(store_.get(id))};
}

Response Service::trails(const std::string& id, const Request& r) {
  const Json body = parse_body(r, false);
  const Document doc = store_.get(id);
  const Multigraph g = graph_of(doc.payload);

  std::optional<VertexId> start;
  std::size_t limit = options_.default_trail_limit;
  std::size_t beats_per_step = 1;
  bool all = false;
  try {
    if (body.contains("start") && !body.at("start").is_null()) {
      start = vertex_id_from_json(body.at("start"));
    }
    all = body.value("all", false);
    limit = body.value("limit", limit);
    beats_per_step = body.value("beats_per_step", beats_per_step);
  } catch (const Json::exception& e) {
    throw ApiError(400, "InvalidDocument", e.what());
  }

  std::vector<Trail> found;
  if (all) {
    EnumerateOptions opts;
    opts.start = start;
    opts.max_results = limit;
    found = enumerate_trails(g, opts);
    if (found.empty()) {
      throw ApiError(422, "NoTrail",
                     "no Eulerian trail; odd vertices: " +
                         std::to_string(odd_vertices(g).size()));
    }
  } else {
    try {
      found.push_back(find_trail(g, start));
    } catch (const EngineError& e) {
      if (e.code() != ErrorCode::NoTrail) throw;
      throw ApiError(422, "NoTrail",
                     std::string(e.what()) + "; odd vertices: " +
                         std::to_string(odd_vertices(g).size()));
    }
  }

  Json out = {{"doc_id", doc.id}, {"revision", doc.revision}};
  Json strings = Json::array();
  for (const auto& t : found) strings.push_back(render_trail(t));
  out["trails"] = std::move(strings);
  if (const auto* schema = std::get_if<Schema>(&doc.payload)) {
    Json choreos = Json::array();
    for (const auto& t : found) {
      Choreography c;
      c.trail = t;
      for (std::size_t i = 0; i < t.edges.size(); ++i) {
        c.styles.push_back(schema->styles.at(t.edges[i]));
        c.beats.push_back(i * beats_per_step);
      }
      choreos.push_back(to_json(c));
    }
    out["choreographies"] = std::move(choreos);
  }
  return {200, std::move(out)};
}

Response Service::edits(const std::string& id, const Request& r) {
  auto op = r.query.find("op");
  auto target = r.query.find("target");
  if (op == r.query.end() || target == r.query.end()) {
    throw ApiError(400, "InvalidArgument", "query needs op and target");
  }
  const EulerKind kind = euler_kind_from_string(target->second);
  const Document doc = store_.get(id);
  const Multigraph g = graph_of(doc.payload);
  EditSearch search;
  if (op->second == "add") {
    search = single_additions(g, kind);
  } else if (op->second == "remove") {
    search = single_removals(g, kind);
  } else if (op->second == "move") {
    search = bridge_moves(g, kind);
  } else {
    throw ApiError(400, "InvalidArgument", "op must be add, remove or move");
  }
  Json out = to_json(search);
  out["doc_id"] = doc.id;
  out["revision"] = doc.revision;
  return {200, std::move(out)};
}

Response Service::atlas_index() {
  return {200, {{"maps", builtin_map_names()}, {"schemas", builtin_schema_names()}}};
}

Response Service::atlas_entry(const std::string& name) {
  auto p = atlas_payload(name);
  if (!p) throw ApiError(404, "UnknownName", "no atlas entry '" + name + "'");
  return {200,
          {{"name", name},
           {"kind", std::holds_alternative<Schema>(*p) ? "schema" : "map"},
           {"payload", std::visit([](const auto& x) { return to_json(x); }, *p)}}};
}

Response Service::validate(const Request& r) {
  const Json body = parse_body(r, true);
  if (!body.contains("doc_id") || !body.at("doc_id").is_string()) {
    throw ApiError(400, "InvalidDocument", "body must carry 'doc_id'");
  }
  const Document doc = store_.get(body.at("doc_id").get<std::string>());
  Json out = {{"doc_id", doc.id}, {"revision", doc.revision}};
  if (body.contains("choreography")) {
    const auto* schema = std::get_if<Schema>(&doc.payload);
    if (!schema) {
      throw ApiError(422, "NotApplicable", "choreographies need a schema document");
    }
    out["report"] = to_json(
        validate_choreography(choreography_from_json(body.at("choreography")), *schema));
    return {200, std::move(out)};
  }
  if (!body.contains("trail") || !body.at("trail").is_string()) {
    throw ApiError(400, "InvalidDocument", "body must carry a 'trail' string");
  }
  const Trail t = parse_trail(body.at("trail").get<std::string>());
  out["report"] = to_json(validate_trail(t, graph_of(doc.payload)));
  return {200, std::move(out)};
}

}  // namespace coreo::api

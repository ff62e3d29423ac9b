#include <algorithm>

#include "coreo/analysis.hpp"
#include "coreo/api.hpp"
#include "coreo/error.hpp"

namespace coreo::api {

namespace {

[[noreturn]] void unprocessable(const std::string& code, const std::string& why) {
  throw ApiError(422, code, why);
}

VertexId vertex_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string() ||
      !VertexId::is_valid(j.at(key).get<std::string>())) {
    throw ApiError(400, "InvalidDocument",
                   std::string("field '") + key + "' must be a vertex id");
  }
  return VertexId(j.at(key).get<std::string>());
}

Point point_field(const Json& j, const char* key) {
  if (!j.contains(key)) return Point{};
  const Json& p = j.at(key);
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
    throw ApiError(400, "InvalidDocument",
                   std::string("field '") + key + "' must be [x, y]");
  }
  return Point{p[0].get<double>(), p[1].get<double>()};
}

bool splits_support(const EdgeEdit& edit) {
  return std::holds_alternative<RemoveEdge>(edit) ||
         std::holds_alternative<MoveEdge>(edit);
}

Json payload_to_json(const Payload& p) {
  return std::visit([](const auto& x) { return to_json(x); }, p);
}

const char* payload_kind(const Payload& p) {
  return std::holds_alternative<Schema>(p) ? "schema" : "map";
}

}  // namespace

Multigraph graph_of(const Payload& p) {
  if (const auto* s = std::get_if<Schema>(&p)) return s->graph;
  return map_to_graph(std::get<MapInstance>(p));
}

DocumentEdit document_edit_from_json(const Json& j, const Payload& context) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ApiError(400, "InvalidDocument", "edit must carry a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "add" || kind == "remove" || kind == "move") {
      return edit_from_json(j, graph_of(context));
    }
    if (kind == "add_vertex") {
      std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
      return AddVertex{vertex_field(j, "id"), std::move(label), point_field(j, "position")};
    }
    if (kind == "remove_vertex") return RemoveVertex{vertex_field(j, "id")};
    if (kind == "set_position") {
      return SetPosition{vertex_field(j, "id"), point_field(j, "position")};
    }
    if (kind == "set_style") {
      const EdgeId id = edge_id_from_json(j.value("id", Json()));
      if (!j.contains("style") || !j.at("style").is_string()) {
        throw ApiError(400, "InvalidDocument", "set_style needs a string 'style'");
      }
      return SetStyle{id, j.at("style").get<std::string>()};
    }
  } catch (const EngineError& e) {
    throw ApiError(400, std::string(to_string(e.code())), e.what());
  } catch (const Json::exception& e) {
    throw ApiError(400, "InvalidDocument", e.what());
  }
  throw ApiError(400, "InvalidDocument", "unknown edit kind '" + kind + "'");
}

Payload apply_document_edit(const Payload& p, const DocumentEdit& edit) {
  try {
    if (const auto* e = std::get_if<EdgeEdit>(&edit)) {
      Payload out = std::visit(
          [e](const auto& x) -> Payload { return apply_edit(x, *e); }, p);
      if (splits_support(*e) && is_edge_connected(graph_of(p)) &&
          !is_edge_connected(graph_of(out))) {
        unprocessable("Disconnects",
                      describe(*e) + " would split the steps into separate pieces");
      }
      return out;
    }
    Payload out = p;
    if (const auto* a = std::get_if<AddVertex>(&edit)) {
      if (auto* s = std::get_if<Schema>(&out)) {
        s->graph.add_vertex(a->id, a->label);
        s->positions[a->id] = a->position;
      } else {
        std::get<MapInstance>(out).add_region(a->id, Region{a->label, {}});
      }
    } else if (const auto* r = std::get_if<RemoveVertex>(&edit)) {
      if (auto* s = std::get_if<Schema>(&out)) {
        s->graph.remove_vertex(r->id);
        s->positions.erase(r->id);
      } else {
        std::get<MapInstance>(out).remove_region(r->id);
      }
    } else if (const auto* sp = std::get_if<SetPosition>(&edit)) {
      auto* s = std::get_if<Schema>(&out);
      if (!s) unprocessable("NotApplicable", "maps have no floor positions");
      if (!s->graph.has_vertex(sp->id)) {
        unprocessable("UnknownVertex", "unknown vertex " + sp->id.str());
      }
      s->positions[sp->id] = sp->position;
    } else if (const auto* st = std::get_if<SetStyle>(&edit)) {
      auto* s = std::get_if<Schema>(&out);
      if (!s) unprocessable("NotApplicable", "bridges have no step style");
      if (!s->graph.has_edge(st->id)) {
        unprocessable("UnknownEdge", "unknown edge " + std::to_string(st->id.value()));
      }
      s->styles[st->id] = st->style;
    }
    return out;
  } catch (const EngineError& e) {
    unprocessable(std::string(to_string(e.code())), e.what());
  }
}

std::shared_ptr<DocumentStore::Entry> DocumentStore::find(const std::string& id) const {
  std::shared_lock guard(lock_);
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw ApiError(404, "UnknownDocument", "no document '" + id + "'");
  }
  return it->second;
}

std::string DocumentStore::create(Payload payload, bool read_only,
                                  std::optional<std::string> id) {
  auto entry = std::make_shared<Entry>();
  entry->doc.payload = std::move(payload);
  entry->doc.read_only = read_only;
  std::unique_lock guard(lock_);
  if (!id) {
    do {
      id = "d" + std::to_string(next_id_++);
    } while (entries_.contains(*id));
  } else if (entries_.contains(*id)) {
    throw ApiError(409, "DuplicateDocument", "document '" + *id + "' exists");
  }
  entry->doc.id = *id;
  entries_.emplace(*id, std::move(entry));
  return *id;
}

Document DocumentStore::get(const std::string& id) const {
  auto entry = find(id);
  std::lock_guard guard(entry->lock);
  return entry->doc;
}

Document DocumentStore::mutate(const std::string& id,
                               std::uint64_t expected_revision,
                               const DocumentEdit& edit) {
  auto entry = find(id);
  std::lock_guard guard(entry->lock);
  Document& doc = entry->doc;
  if (doc.read_only) {
    throw ApiError(403, "ReadOnly", "document '" + id + "' is read-only");
  }
  if (doc.revision != expected_revision) {
    throw ApiError(409, "RevisionConflict",
                   "document '" + id + "' is at revision " +
                       std::to_string(doc.revision) + ", not " +
                       std::to_string(expected_revision));
  }
  doc.payload = apply_document_edit(doc.payload, edit);
  ++doc.revision;
  return doc;
}

std::vector<std::string> DocumentStore::ids() const {
  std::shared_lock guard(lock_);
  std::vector<std::string> out;
  for (const auto& [id, entry] : entries_) out.push_back(id);
  return out;
}

Json DocumentStore::snapshot() const {
  Json docs = Json::array();
  for (const auto& id : ids()) {
    const Document d = get(id);
    docs.push_back({{"id", d.id},
                    {"kind", payload_kind(d.payload)},
                    {"revision", d.revision},
                    {"read_only", d.read_only},
                    {"payload", payload_to_json(d.payload)}});
  }
  std::shared_lock guard(lock_);
  return {{"documents", std::move(docs)}, {"next_id", next_id_}};
}

void DocumentStore::restore(const Json& snapshot) {
  std::map<std::string, std::shared_ptr<Entry>> entries;
  try {
    for (const auto& d : snapshot.at("documents")) {
      auto entry = std::make_shared<Entry>();
      entry->doc.id = d.at("id").get<std::string>();
      entry->doc.revision = d.at("revision").get<std::uint64_t>();
      entry->doc.read_only = d.value("read_only", false);
      if (d.at("kind").get<std::string>() == "schema") {
        entry->doc.payload = schema_from_json(d.at("payload"));
      } else {
        entry->doc.payload = map_from_json(d.at("payload"));
      }
      entries.emplace(entry->doc.id, std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw EngineError(ErrorCode::InvalidDocument,
                      std::string("bad snapshot: ") + e.what());
  }
  std::unique_lock guard(lock_);
  entries_ = std::move(entries);
  next_id_ = snapshot.value("next_id", std::uint64_t{1});
}

}  // namespace coreo::api

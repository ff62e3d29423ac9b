#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coreo/choreography.hpp"
#include "coreo/json_io.hpp"
#include "coreo/maps.hpp"

namespace coreo::api {

/// Request-level failure with its HTTP status; serialized as
/// {"code": ..., "reason": ...}.
class ApiError : public std::runtime_error {
 public:
  ApiError(int status, std::string code, const std::string& reason)
      : std::runtime_error(reason), status_(status), code_(std::move(code)) {}

  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }

 private:
  int status_;
  std::string code_;
};

using Payload = std::variant<Schema, MapInstance>;

Multigraph graph_of(const Payload& p);

struct Document {
  std::string id;
  Payload payload;
  std::uint64_t revision = 1;
  bool read_only = false;
};

// Non-topological edits the studio needs alongside EdgeEdit.
struct AddVertex {
  VertexId id;
  std::string label;
  Point position;
};
struct RemoveVertex {
  VertexId id;
};
struct SetPosition {
  VertexId id;
  Point position;
};
struct SetStyle {
  EdgeId id;
  std::string style;
};

using DocumentEdit =
    std::variant<EdgeEdit, AddVertex, RemoveVertex, SetPosition, SetStyle>;

/// Reads {"kind": add|remove|move|add_vertex|remove_vertex|set_position|
/// set_style, ...}.
DocumentEdit document_edit_from_json(const Json& j, const Payload& context);

/// Applies `edit`; throws ApiError(422) for invalid edits, including
/// removals and moves that split a connected edge support (code
/// "Disconnects").
Payload apply_document_edit(const Payload& p, const DocumentEdit& edit);

/// In-memory documents with optimistic concurrency. Mutations to one
/// document are serialized by that document's own lock; readers of other
/// documents never wait on it.
class DocumentStore {
 public:
  /// Returns the new document id ("d1", "d2", ... unless `id` is given).
  std::string create(Payload payload, bool read_only = false,
                     std::optional<std::string> id = std::nullopt);

  /// Snapshot copy. Throws ApiError(404).
  Document get(const std::string& id) const;

  /// Throws ApiError 404 (unknown), 409 (stale revision), 403 (read-only),
  /// 422 (invalid edit).
  Document mutate(const std::string& id, std::uint64_t expected_revision,
                  const DocumentEdit& edit);

  std::vector<std::string> ids() const;

  Json snapshot() const;
  void restore(const Json& snapshot);

 private:
  struct Entry {
    mutable std::mutex lock;
    Document doc;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;

  mutable std::shared_mutex lock_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
  std::uint64_t next_id_ = 1;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  Json body;
};

struct ServiceOptions {
  /// Builtins are preloaded as documents "atlas:<name>"; with this set they
  /// refuse mutations (403).
  bool atlas_readonly = false;
  std::size_t default_trail_limit = 100;
};

/// Transport-independent endpoint table; the HTTP server is a thin adapter.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  Response handle(const Request& request);

  DocumentStore& store() { return store_; }

 private:
  Response create_doc(const Request& r);
  Response get_doc(const std::string& id);
  Response patch_doc(const std::string& id, const Request& r);
  Response classification(const std::string& id);
  Response trails(const std::string& id, const Request& r);
  Response edits(const std::string& id, const Request& r);
  Response atlas_index();
  Response atlas_entry(const std::string& name);
  Response validate(const Request& r);

  ServiceOptions options_;
  DocumentStore store_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  ServiceOptions service;
  /// Snapshot file read at startup (if present) and written on shutdown.
  std::optional<std::string> persist_path;
};

/// HTTP adapter over a Service. `listen` blocks until `stop` is called from
/// another thread.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  bool bind(const std::string& host, int port);
  /// Binds an ephemeral port and returns it, or -1.
  int bind_any(const std::string& host);
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks until SIGINT/SIGTERM. Returns false if the address cannot be bound.
bool serve(const ServeOptions& options);

}  // namespace coreo::api

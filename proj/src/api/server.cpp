#include <csignal>
#include <fstream>
#include <iostream>

#include <httplib.h>

#include "coreo/api.hpp"

namespace coreo::api {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
      Request r{req.method, req.path, {}, req.body};
      for (const auto& [key, value] : req.params) r.query[key] = value;
      const Response out = service.handle(r);
      res.status = out.status;
      res.set_content(out.body.dump(), "application/json");
    };
    server.Get(R"(/.*)", handler);
    server.Post(R"(/.*)", handler);
    server.Patch(R"(/.*)", handler);
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() = default;

bool HttpServer::bind(const std::string& host, int port) {
  return impl_->server.bind_to_port(host, port);
}

int HttpServer::bind_any(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }
void HttpServer::stop() { impl_->server.stop(); }
bool HttpServer::running() const { return impl_->server.is_running(); }

namespace {

HttpServer* g_server = nullptr;

extern "C" void stop_on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

bool serve(const ServeOptions& options) {
  Service service(options.service);
  if (options.persist_path) {
    std::ifstream in(*options.persist_path);
    if (in) service.store().restore(Json::parse(in));
  }

  HttpServer server(service);
  if (!server.bind(options.host, options.port)) {
    std::cerr << "cannot bind " << options.host << ":" << options.port << "\n";
    return false;
  }
  g_server = &server;
  std::signal(SIGINT, stop_on_signal);
  std::signal(SIGTERM, stop_on_signal);
  std::cerr << "serving on http://" << options.host << ":" << options.port << "\n";
  server.listen();
  g_server = nullptr;

  if (options.persist_path) {
    std::ofstream out(*options.persist_path);
    out << service.store().snapshot().dump(2) << "\n";
  }
  return true;
}

}  // namespace coreo::api

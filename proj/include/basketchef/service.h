// HTTP JSON API over live sessions.
//
//   POST   /sessions                      create a session (body: config overrides)
//   GET    /corpus                        corpus summary
//   GET    /sessions/{id}                 state snapshot
//   POST   /sessions/{id}/items           {"item": name}
//   DELETE /sessions/{id}/items/{name}
//   GET    /sessions/{id}/recommendations
//   POST   /sessions/{id}/select          {"dish", "recipe_id", "accepted_items": [names]}
//
// Errors are {"error": {"code", "message", "details"}}. Sessions live in
// memory only and are evicted after sitting idle for ServiceOptions::idle_timeout.

#ifndef BASKETCHEF_SERVICE_H_
#define BASKETCHEF_SERVICE_H_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "basketchef/model.h"
#include "basketchef/session.h"

namespace httplib {
class Server;
}

namespace basketchef {

struct ServiceOptions {
  SessionConfig defaults;
  std::chrono::steady_clock::duration idle_timeout = std::chrono::minutes(30);
  // Injectable for eviction tests.
  std::function<std::chrono::steady_clock::time_point()> clock = [] {
    return std::chrono::steady_clock::now();
  };
};

struct SessionHandle {
  std::string session_id;
  std::chrono::system_clock::time_point created_at;
  SessionConfig config;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

class Service {
 public:
  explicit Service(std::shared_ptr<const Model> model, ServiceOptions options = {});

  // Routes one request. Thread-safe; requests on one session are serialized.
  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

  // Registers handle() for every route on the server, with permissive CORS.
  void mount(httplib::Server& server);

  std::size_t session_count() const;
  // Drops sessions idle longer than the timeout; returns how many.
  std::size_t evict_idle();

 private:
  struct Entry {
    explicit Entry(Session s) : session(std::move(s)) {}
    std::mutex mu;
    Session session;
    SessionHandle handle;
    std::chrono::steady_clock::time_point last_used;
  };

  HttpResponse create_session(std::string_view body);
  HttpResponse corpus_summary() const;
  HttpResponse session_request(const std::string& id, std::string_view method,
                               std::string_view rest, std::string_view body);
  std::shared_ptr<Entry> find(const std::string& id);

  std::shared_ptr<const Model> model_;
  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
};

// Binds and serves until stopped. Returns false when the port cannot be bound.
bool serve(Service& service, const std::string& host, int port);

}  // namespace basketchef

#endif  // BASKETCHEF_SERVICE_H_

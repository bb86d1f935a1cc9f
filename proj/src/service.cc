#include "basketchef/service.h"

#include <cmath>
#include <vector>

#include "basketchef/json_view.h"
#include "httplib.h"

namespace basketchef {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxSuggestions = 10;

HttpResponse error_response(int status, std::string_view code, const std::string& message,
                            ordered_json details = ordered_json::object()) {
  ordered_json err;
  err["code"] = code;
  err["message"] = message;
  err["details"] = std::move(details);
  ordered_json body;
  body["error"] = std::move(err);
  return {status, body.dump()};
}

HttpResponse ok(int status, const ordered_json& body) { return {status, body.dump()}; }

// Vocabulary names sharing the longest available prefix with `name`.
ordered_json suggestions(const Corpus& corpus, const std::string& name) {
  ordered_json out = ordered_json::array();
  std::string prefix = name;
  while (!prefix.empty()) {
    auto matches = corpus.items_with_prefix(prefix);
    if (!matches.empty()) {
      for (std::size_t i = 0; i < matches.size() && i < kMaxSuggestions; ++i) {
        out.push_back(matches[i]);
      }
      break;
    }
    prefix.pop_back();
  }
  return out;
}

HttpResponse unknown_item(const Corpus& corpus, const std::string& name) {
  ordered_json details;
  details["item"] = name;
  details["suggestions"] = suggestions(corpus, name);
  return error_response(404, "unknown_item", "no vocabulary item named \"" + name + "\"",
                        std::move(details));
}

struct ParsedBody {
  json value;
  std::optional<HttpResponse> error;
};

ParsedBody parse_object(std::string_view body, bool allow_empty) {
  ParsedBody out;
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    if (allow_empty) {
      out.value = json::object();
    } else {
      out.error = error_response(400, "bad_request", "request body must be a JSON object");
    }
    return out;
  }
  try {
    out.value = json::parse(body);
  } catch (const json::parse_error& e) {
    out.error = error_response(400, "bad_request", std::string("malformed JSON: ") + e.what());
    return out;
  }
  if (!out.value.is_object()) {
    out.error = error_response(400, "bad_request", "request body must be a JSON object");
  }
  return out;
}

// Applies JSON overrides onto `config`, collecting offending field names.
void apply_overrides(const json& overrides, SessionConfig& config, std::vector<std::string>& bad) {
  auto count_field = [&](const char* key, std::size_t& slot) {
    if (!overrides.contains(key)) return;
    const json& v = overrides.at(key);
    if (!v.is_number() || (v.is_number_float() && v.get<double>() != std::floor(v.get<double>())) ||
        v.get<double>() < 0) {
      bad.emplace_back(key);
      return;
    }
    slot = static_cast<std::size_t>(v.get<double>());
  };
  auto real_field = [&](const char* key, double& slot) {
    if (!overrides.contains(key)) return;
    const json& v = overrides.at(key);
    if (!v.is_number()) {
      bad.emplace_back(key);
      return;
    }
    slot = v.get<double>();
  };
  for (const auto& [key, value] : overrides.items()) {
    if (key != "k" && key != "h" && key != "q" && key != "n" && key != "theta" && key != "top_n") {
      bad.push_back(key);
    }
  }
  count_field("k", config.k);
  count_field("h", config.h);
  count_field("q", config.q);
  real_field("n", config.n);
  real_field("theta", config.theta);
  count_field("top_n", config.top_n);
}

ordered_json session_body(const std::string& id, const Session& session, const char* key,
                          ordered_json payload) {
  ordered_json body;
  body["session_id"] = id;
  body[key] = std::move(payload);
  body["state"] = state_json(session);
  return body;
}

}  // namespace

Service::Service(std::shared_ptr<const Model> model, ServiceOptions options)
    : model_(std::move(model)), options_(std::move(options)) {
  options_.defaults.validate();
}

std::size_t Service::session_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

std::size_t Service::evict_idle() {
  const auto now = options_.clock();
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_used > options_.idle_timeout) {
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_used = options_.clock();
  return it->second;
}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             std::string_view body) {
  evict_idle();
  try {
    if (path == "/corpus") {
      if (method != "GET") return error_response(405, "method_not_allowed", "use GET /corpus");
      return corpus_summary();
    }
    if (path == "/sessions") {
      if (method != "POST") return error_response(405, "method_not_allowed", "use POST /sessions");
      return create_session(body);
    }
    constexpr std::string_view kPrefix = "/sessions/";
    if (path.substr(0, kPrefix.size()) == kPrefix) {
      std::string_view rest = path.substr(kPrefix.size());
      const auto slash = rest.find('/');
      const std::string id(rest.substr(0, slash));
      rest = slash == std::string_view::npos ? std::string_view() : rest.substr(slash);
      if (!id.empty()) return session_request(id, method, rest, body);
    }
    return error_response(404, "not_found", "no route for " + std::string(method) + " " +
                                                std::string(path));
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

HttpResponse Service::create_session(std::string_view body) {
  auto parsed = parse_object(body, /*allow_empty=*/true);
  if (parsed.error) return *parsed.error;

  SessionConfig config = options_.defaults;
  std::vector<std::string> bad;
  apply_overrides(parsed.value, config, bad);
  for (auto& field : config.invalid_fields()) {
    if (std::find(bad.begin(), bad.end(), field) == bad.end()) bad.push_back(field);
  }
  if (!bad.empty()) {
    ordered_json details;
    details["fields"] = bad;
    std::string msg = "invalid session config field(s):";
    for (const auto& f : bad) msg += " " + f;
    return error_response(400, "validation_error", msg, std::move(details));
  }

  auto entry = std::make_shared<Entry>(Session(model_, config));
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    id = "s" + std::to_string(next_id_++);
    entry->handle = SessionHandle{id, std::chrono::system_clock::now(), config};
    entry->last_used = options_.clock();
    sessions_.emplace(id, entry);
  }
  std::lock_guard<std::mutex> lock(entry->mu);
  return ok(201, session_body(id, entry->session, "config", config_json(config)));
}

HttpResponse Service::corpus_summary() const {
  return ok(200, corpus_summary_json(*model_, options_.defaults.k, options_.defaults.h));
}

HttpResponse Service::session_request(const std::string& id, std::string_view method,
                                      std::string_view rest, std::string_view body) {
  auto entry = find(id);
  if (!entry) {
    ordered_json details;
    details["session_id"] = id;
    return error_response(404, "session_not_found", "no session \"" + id + "\"",
                          std::move(details));
  }
  std::lock_guard<std::mutex> lock(entry->mu);
  Session& session = entry->session;
  const Corpus& corpus = model_->corpus();

  if (rest.empty() || rest == "/") {
    if (method != "GET") return error_response(405, "method_not_allowed", "use GET /sessions/{id}");
    return ok(200, session_body(id, session, "config", config_json(entry->handle.config)));
  }

  if (rest == "/items") {
    if (method != "POST") return error_response(405, "method_not_allowed", "use POST to add items");
    auto parsed = parse_object(body, false);
    if (parsed.error) return *parsed.error;
    if (!parsed.value.contains("item") || !parsed.value["item"].is_string()) {
      return error_response(400, "bad_request", "body must be {\"item\": name}");
    }
    const std::string name = parsed.value["item"].get<std::string>();
    auto item = corpus.find_item(name);
    if (!item) return unknown_item(corpus, name);
    const EventReport report = session.add_item(*item);
    return ok(200, session_body(id, session, "report", report_json(session, report)));
  }

  constexpr std::string_view kItemPrefix = "/items/";
  if (rest.substr(0, kItemPrefix.size()) == kItemPrefix) {
    if (method != "DELETE") {
      return error_response(405, "method_not_allowed", "use DELETE to remove items");
    }
    const std::string name(rest.substr(kItemPrefix.size()));
    auto item = corpus.find_item(name);
    if (!item) return unknown_item(corpus, name);
    if (!session.in_basket(*item)) {
      ordered_json details;
      details["item"] = corpus.item_name(*item);
      return error_response(409, "not_in_basket",
                            "item \"" + corpus.item_name(*item) + "\" is not in the basket",
                            std::move(details));
    }
    const EventReport report = session.remove_item(*item);
    return ok(200, session_body(id, session, "report", report_json(session, report)));
  }

  if (rest == "/recommendations") {
    if (method != "GET") return error_response(405, "method_not_allowed", "use GET");
    return ok(200, session_body(id, session, "recommendations",
                                recommendations_json(session, session.recommend())));
  }

  if (rest == "/select") {
    if (method != "POST") return error_response(405, "method_not_allowed", "use POST");
    auto parsed = parse_object(body, false);
    if (parsed.error) return *parsed.error;
    const json& v = parsed.value;
    if (!v.contains("dish") || !v["dish"].is_string() || !v.contains("recipe_id") ||
        !v["recipe_id"].is_string() ||
        (v.contains("accepted_items") && !v["accepted_items"].is_array())) {
      return error_response(
          400, "bad_request",
          "body must be {\"dish\": str, \"recipe_id\": str, \"accepted_items\": [names]}");
    }
    std::vector<ItemId> accepted;
    if (v.contains("accepted_items")) {
      for (const json& name : v["accepted_items"]) {
        if (!name.is_string()) {
          return error_response(400, "bad_request", "accepted_items must be strings");
        }
        auto item = corpus.find_item(name.get<std::string>());
        if (!item) return unknown_item(corpus, name.get<std::string>());
        accepted.push_back(*item);
      }
    }
    try {
      const EventReport report = session.select_dish(v["dish"].get<std::string>(),
                                                     v["recipe_id"].get<std::string>(), accepted);
      return ok(200, session_body(id, session, "report", report_json(session, report)));
    } catch (const SessionError& e) {
      const bool missing = e.code() == SessionError::Code::kUnknownRecipe;
      return error_response(missing ? 404 : 400, missing ? "unknown_recipe" : "invalid_selection",
                            e.what());
    }
  }

  return error_response(404, "not_found", "no route for " + std::string(method) + " /sessions/" +
                                              id + std::string(rest));
}

void Service::mount(httplib::Server& server) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse out = handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json; charset=utf-8");
  };
  server.Get(R"(/.*)", route);
  server.Post(R"(/.*)", route);
  server.Delete(R"(/.*)", route);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
}

bool serve(Service& service, const std::string& host, int port) {
  httplib::Server server;
  service.mount(server);
  if (!server.bind_to_port(host, port)) return false;
  return server.listen_after_bind();
}

}  // namespace basketchef

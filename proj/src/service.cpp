#include "clusterbench/service.hpp"

#include <httplib.h>

#include "clusterbench/error.hpp"

namespace clusterbench {

namespace {

ServiceResponse json_response(int status, const Json& body) { return {status, body.dump()}; }

ServiceResponse error_response(int status, const std::string& message) {
  return json_response(status, Json{{"error", message}});
}

Json parse_body(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const char* color_name(VertexColor c) {
  switch (c) {
    case VertexColor::green: return "green";
    case VertexColor::red: return "red";
    case VertexColor::frozen: return "frozen";
  }
  return "";
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) parts.push_back(path.substr(i, j - i));
    i = j;
  }
  return parts;
}

}  // namespace

struct WorkbenchService::Session {
  struct Snapshot {
    Seed seed;
    FramedState framed;
    Json action;
  };

  explicit Session(std::string session_id, const Seed& s)
      : id(std::move(session_id)), seed(s), framed(s.quiver) {}

  std::mutex mutex;
  std::string id;
  Seed seed;
  FramedState framed;
  /// States before each applied action, most recent last.
  std::vector<Snapshot> undo;
};

WorkbenchService::WorkbenchService(ServiceOptions options) : options_(options) {}
WorkbenchService::~WorkbenchService() = default;

IceQuiver WorkbenchService::builtin(const std::string& name) {
  auto a4 = DynkinDiagram::parse("A4");
  if (name == "gls-A4-w0") return gls_quiver(a4, parse_word("1,2,3,4,1,2,3,1,2,1"));
  if (name == "gls-A4-richardson") return gls_quiver(a4, parse_word("1,2,3,1,2,4,3"));
  throw ParseError("unknown builtin " + name);
}

std::shared_ptr<WorkbenchService::Session> WorkbenchService::find(const std::string& id) {
  std::lock_guard lock(registry_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Json WorkbenchService::state_json(const Session& s) const {
  const IceQuiver& q = s.seed.quiver;
  Json j;
  j["id"] = s.id;
  j["quiver"] = quiver_to_json(q);
  Json frozen = Json::array(), status = Json::array(), cvec = Json::array();
  Json cluster = Json::array(), terms = Json::array();
  for (std::size_t v = 0; v < q.size(); ++v) {
    frozen.push_back(q.is_frozen(v));
    status.push_back(color_name(s.framed.color(v)));
    cvec.push_back(q.is_frozen(v) ? Json(nullptr) : Json(s.framed.c_vector(v)));
    const RationalFunction& f = s.seed.cluster[v];
    terms.push_back(f.term_count());
    cluster.push_back(f.term_count() > options_.term_budget ? std::string("<large>") : f.to_string());
  }
  j["frozen"] = std::move(frozen);
  j["status"] = std::move(status);
  j["c_vectors"] = std::move(cvec);
  j["cluster"] = std::move(cluster);
  j["cluster_terms"] = std::move(terms);
  Json history = Json::array();
  for (const auto& snap : s.undo) history.push_back(snap.action);
  j["history"] = std::move(history);
  j["all_red"] = s.framed.is_all_red();
  return j;
}

ServiceResponse WorkbenchService::create_session(const std::string& body) {
  Seed seed;
  try {
    Json j = parse_body(body);
    if (j.is_object() && j.contains("builtin")) {
      if (!j.at("builtin").is_string()) throw ParseError("builtin must be a string");
      seed = initial_seed(builtin(j.at("builtin").get<std::string>()));
    } else {
      seed = seed_from_json(j);
    }
  } catch (const DomainError& e) {
    return error_response(400, e.what());
  }
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(registry_mutex_);
    std::string id = "s" + std::to_string(next_id_++);
    s = std::make_shared<Session>(id, seed);
    sessions_.emplace(id, s);
  }
  std::lock_guard lock(s->mutex);
  return json_response(201, state_json(*s));
}

ServiceResponse WorkbenchService::get_session(const std::string& id) {
  auto s = find(id);
  if (!s) return error_response(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  return json_response(200, state_json(*s));
}

ServiceResponse WorkbenchService::mutate(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error_response(404, "unknown session " + id);
  std::size_t k;
  try {
    Json j = parse_body(body);
    if (!j.is_object() || !j.contains("vertex") || !j.at("vertex").is_number_integer())
      throw ParseError("body must be {\"vertex\": k}");
    auto v = j.at("vertex").get<long long>();
    if (v < 1) throw ParseError("vertex must be positive");
    k = static_cast<std::size_t>(v - 1);
  } catch (const DomainError& e) {
    return error_response(400, e.what());
  }
  std::lock_guard lock(s->mutex);
  if (k >= s->seed.size()) return error_response(400, "vertex " + std::to_string(k + 1) + " out of range");
  if (s->seed.quiver.is_frozen(k)) return error_response(409, "vertex " + std::to_string(k + 1) + " is frozen");
  Session::Snapshot snap{s->seed, s->framed, Json{{"op", "mutate"}, {"vertex", k + 1}}};
  s->seed = mutate_seed(s->seed, k);
  s->framed = mutate_framed(s->framed, k);
  s->undo.push_back(std::move(snap));
  return json_response(200, state_json(*s));
}

ServiceResponse WorkbenchService::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error_response(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  if (s->undo.empty()) return error_response(409, "nothing to undo");
  s->seed = std::move(s->undo.back().seed);
  s->framed = std::move(s->undo.back().framed);
  s->undo.pop_back();
  return json_response(200, state_json(*s));
}

ServiceResponse WorkbenchService::reduce(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error_response(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  try {
    ReductionScript script = script_from_json(parse_body(body));
    Seed seed = s->seed;
    FramedState framed = s->framed;
    for (std::size_t k : script.mutations) {
      seed = mutate_seed(seed, k);
      framed = mutate_framed(framed, k);
    }
    for (std::size_t k : script.freezes) {
      if (k >= seed.size()) throw DomainError("vertex " + std::to_string(k + 1) + " out of range");
      seed.quiver = freeze(seed.quiver, k);
    }
    // Deletion labels refer to the quiver at the start of the phase.
    std::vector<std::size_t> deletions = script.deletions;
    std::sort(deletions.begin(), deletions.end());
    if (std::adjacent_find(deletions.begin(), deletions.end()) != deletions.end())
      throw DomainError("vertex deleted twice");
    for (auto it = deletions.rbegin(); it != deletions.rend(); ++it) {
      if (*it >= seed.size()) throw DomainError("vertex " + std::to_string(*it + 1) + " out of range");
      seed = specialize_frozen(seed, *it);
    }
    if (!script.freezes.empty() || !script.deletions.empty()) framed = FramedState(seed.quiver);
    Session::Snapshot snap{s->seed, s->framed, Json{{"op", "reduce"}, {"script", script_to_json(script)}}};
    s->seed = std::move(seed);
    s->framed = std::move(framed);
    s->undo.push_back(std::move(snap));
  } catch (const DomainError& e) {
    return error_response(400, e.what());
  }
  return json_response(200, state_json(*s));
}

ServiceResponse WorkbenchService::reddening(const std::string& body) {
  try {
    Json j = parse_body(body);
    if (!j.is_object()) throw ParseError("body must be a JSON object");
    IceQuiver q = quiver_from_json(j.contains("quiver") ? j.at("quiver") : j);
    std::size_t depth = options_.max_reddening_depth;
    if (j.contains("depth")) {
      if (!j.at("depth").is_number_integer() || j.at("depth").get<long long>() < 1)
        throw ParseError("depth must be a positive integer");
      depth = static_cast<std::size_t>(j.at("depth").get<long long>());
    }
    if (depth > options_.max_reddening_depth)
      throw DomainError("depth exceeds the server limit of " + std::to_string(options_.max_reddening_depth));
    auto seq = find_reddening(q, depth);
    Json out;
    if (seq) {
      Json a = Json::array();
      for (std::size_t k : *seq) a.push_back(k + 1);
      out["sequence"] = std::move(a);
    } else {
      out["sequence"] = nullptr;
    }
    out["depth"] = depth;
    return json_response(200, out);
  } catch (const DomainError& e) {
    return error_response(400, e.what());
  }
}

ServiceResponse WorkbenchService::export_quiver(const std::string& id) {
  auto s = find(id);
  if (!s) return error_response(404, "unknown session " + id);
  std::lock_guard lock(s->mutex);
  return {200, quiver_to_string(s->seed.quiver) + "\n"};
}

ServiceResponse WorkbenchService::handle(const std::string& method, const std::string& path,
                                         const std::string& body) {
  auto parts = split_path(path);
  const std::size_t n = parts.size();
  if (method == "POST" && n == 1 && parts[0] == "sessions") return create_session(body);
  if (method == "POST" && n == 1 && parts[0] == "reddening") return reddening(body);
  if (n == 2 && parts[0] == "export" && method == "GET") return export_quiver(parts[1]);
  if (n >= 2 && parts[0] == "sessions") {
    const std::string& id = parts[1];
    if (n == 2 && method == "GET") return get_session(id);
    if (n == 3 && method == "POST") {
      if (parts[2] == "mutate") return mutate(id, body);
      if (parts[2] == "undo") return undo(id);
      if (parts[2] == "reduce") return reduce(id, body);
    }
  }
  return error_response(404, "no route for " + method + " " + path);
}

// ---------------------------------------------------------------------------

HttpServer::HttpServer(WorkbenchService& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r;
    try {
      r = service_.handle(req.method, req.path, req.body);
    } catch (const std::exception& e) {
      r = error_response(500, e.what());
    }
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server_->Get(".*", forward);
  server_->Post(".*", forward);
  server_->Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = server_->bind_to_any_port(host);
    if (bound <= 0) throw DomainError("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) throw DomainError("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

}  // namespace clusterbench

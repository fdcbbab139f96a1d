#pragma once

// HTTP JSON API over mutation sessions. WorkbenchService holds the state and
// answers requests as (status, body) pairs; HttpServer exposes it over HTTP.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "clusterbench/framed.hpp"
#include "clusterbench/io.hpp"
#include "clusterbench/seed.hpp"

namespace httplib {
class Server;
}

namespace clusterbench {

inline constexpr int kDefaultPort = 7161;

struct ServiceOptions {
  /// Cluster variables with more terms (numerator plus denominator) are
  /// reported as "<large>".
  std::size_t term_budget = 200;
  std::size_t max_reddening_depth = 20;
};

struct ServiceResponse {
  int status = 200;
  /// JSON text, or the quiver file for exports.
  std::string body;
};

class WorkbenchService {
 public:
  explicit WorkbenchService(ServiceOptions options = {});
  ~WorkbenchService();

  /// Routes a request; path excludes the query string.
  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

  ServiceResponse create_session(const std::string& body);
  ServiceResponse get_session(const std::string& id);
  ServiceResponse mutate(const std::string& id, const std::string& body);
  ServiceResponse undo(const std::string& id);
  ServiceResponse reduce(const std::string& id, const std::string& body);
  ServiceResponse reddening(const std::string& body);
  ServiceResponse export_quiver(const std::string& id);

  /// Builtin quivers accepted by create_session: "gls-A4-w0", "gls-A4-richardson".
  static IceQuiver builtin(const std::string& name);

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id);
  Json state_json(const Session& s) const;

  ServiceOptions options_;
  std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
};

class HttpServer {
 public:
  explicit HttpServer(WorkbenchService& service);
  ~HttpServer();

  /// Binds to host:port; port 0 picks a free port. Returns the bound port or
  /// throws DomainError.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires bind().
  void listen();
  void stop();

 private:
  WorkbenchService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace clusterbench

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace faasbench::workloads {

struct CustomRequest {
  std::map<std::string, std::string> params;
  std::string body;
};

struct CustomResponse {
  int status{200};
  std::string content_type{"application/json"};
  std::string body;
};

using CustomHandler = std::function<CustomResponse(const CustomRequest&)>;

// User-supplied functions served under /custom/<name>. Handlers are trusted
// code; register them before the server starts.
class CustomRegistry {
public:
  void add(const std::string& name, CustomHandler handler);
  const CustomHandler* find(const std::string& name) const;
  std::vector<std::string> names() const;

private:
  std::map<std::string, CustomHandler> handlers_;
};

// Local function server exposing every built-in workload over HTTP:
//   /fact?n=..., /matrix?dim=..&seed=.., /netlatency, /diskio?size=..&seed=..,
//   /custom/<name>, /stall?ms=...
// Doubles as the generic-adapter target and the injector's no-op calibration
// endpoint.
class WorkloadServer {
public:
  WorkloadServer();
  ~WorkloadServer();
  WorkloadServer(const WorkloadServer&) = delete;
  WorkloadServer& operator=(const WorkloadServer&) = delete;

  CustomRegistry& custom() { return custom_; }

  // Binds and serves on a background thread. port 0 picks a free port.
  // Throws std::runtime_error on bind failure.
  void start(const std::string& host = "127.0.0.1", int port = 0);
  void stop();

  int port() const { return port_; }
  std::string base_url() const;
  const std::string& instance_id() const { return instance_id_; }

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  CustomRegistry custom_;
  std::string instance_id_;
  int port_{0};
};

}  // namespace faasbench::workloads

#pragma once

#include <memory>
#include <string>

#include "faasbench/sim/wall_runner.hpp"

namespace faasbench::sim {

// Serves a wall-clock simulator over local HTTP so the real injector can
// exercise it over the wire.
//
//   GET/POST /invoke/<deployment-id>   -> simulated function response
//       headers: x-sim-instance-id, x-sim-cold, x-sim-region
//       503 on rejection, 504 past the deployment timeout, 404 when removed
//   GET /admin/instances               -> active instance counts (JSON)
//   GET /admin/stats                   -> engine counters (JSON)
//   GET /admin/trace/<deployment-id>   -> instance-count time series (JSON)
class SimHttpServer {
public:
  explicit SimHttpServer(WallClockRunner& runner);
  ~SimHttpServer();
  SimHttpServer(const SimHttpServer&) = delete;
  SimHttpServer& operator=(const SimHttpServer&) = delete;

  // Throws std::runtime_error on bind failure. port 0 picks a free port.
  void start(const std::string& host = "127.0.0.1", int port = 0);
  void stop();

  int port() const { return port_; }
  std::string base_url() const;

private:
  struct Impl;
  WallClockRunner& runner_;
  std::unique_ptr<Impl> impl_;
  int port_{0};
};

}  // namespace faasbench::sim

#pragma once

#include <functional>
#include <memory>
#include <string>

#include "faasbench/sim/engine.hpp"

namespace faasbench::sim {

// Owns an Engine and maps its virtual timeline onto the wall clock: calls
// block for the full simulated latency. All engine state stays on the runner
// side of a message-passing boundary; callers never touch it concurrently.
class WallClockRunner {
public:
  explicit WallClockRunner(Engine engine);
  ~WallClockRunner();
  WallClockRunner(const WallClockRunner&) = delete;
  WallClockRunner& operator=(const WallClockRunner&) = delete;

  // Submits a request at the current wall instant and blocks until its
  // completion event fires. Throws for unknown/non-ready deployments.
  Sample invoke(const std::string& deployment_id);

  // Runs `fn` on the engine under the runner's lock (admin reads, lifecycle).
  void with_engine(const std::function<void(Engine&)>& fn);

  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace faasbench::sim

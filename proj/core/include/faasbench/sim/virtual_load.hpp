#pragma once

#include <vector>

#include "faasbench/injector/plan.hpp"
#include "faasbench/sim/engine.hpp"

namespace faasbench::sim {

// Injector protocols replayed on the simulator's virtual clock: identical
// schedules and accounting to the wall-clock injector, instant to run and
// fully deterministic for a fixed engine seed.

// One request per deployment per interval, starting at t0 = engine.now().
std::vector<Sample> run_probe_virtual(Engine& engine,
                                      const std::vector<std::string>& deployment_ids,
                                      std::int64_t interval_ms, int samples_per_target,
                                      const injector::SampleSink& sink = {});

// Constant-throughput steps with intended_start = t0 + i/rate, a drain gap
// between steps, and coordinated-omission-corrected latency accounting.
std::vector<injector::RateResult> run_stress_virtual(Engine& engine,
                                                     const std::string& deployment_id,
                                                     const injector::StressPlan& plan,
                                                     const injector::SampleSink& sink = {});

}  // namespace faasbench::sim

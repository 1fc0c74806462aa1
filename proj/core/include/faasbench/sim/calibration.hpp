#pragma once

#include <string>

#include "faasbench/injector/plan.hpp"
#include "faasbench/model/profile.hpp"
#include "faasbench/workloads/workloads.hpp"

namespace faasbench::sim {

// A ready-to-run saturation scenario: profile, deployment parameters and the
// stress plan that drives it.
struct SaturationScenario {
  ProviderProfile profile;
  std::string region;
  std::string runtime_label;
  int memory_mb{0};
  workloads::WorkloadSpec workload;
  injector::StressPlan plan;
};

// The slow-scaling Python deployment whose throughput collapse the stress
// mode reproduces: 12-instance ceiling, one spawn per 20 s, 400 ms service
// time (ceiling x service rate = the observed 30 req/s plateau), driven from
// a cold pool through the standard 10..1000 req/s ladder.
SaturationScenario azure_python_saturation();

}  // namespace faasbench::sim

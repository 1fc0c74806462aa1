#include "faasbench/sim/calibration.hpp"

#include "faasbench/sim/service_law.hpp"
#include "faasbench/util/strings.hpp"

namespace faasbench::sim {

SaturationScenario azure_python_saturation() {
  SaturationScenario s;
  s.profile = builtin_profile("azure");
  s.profile.scale_out.effective_instance_cap = 12;
  s.profile.scale_out.max_spawn_rate = 0.05;  // one instance per 20 s
  s.profile.scale_out.queue_capacity = 120;
  s.region = "west-europe";
  s.runtime_label = "python 3.7";
  s.memory_mb = 1536;

  // Base work such that the fixed-band law lands on 400 ms of service time.
  const double base_work_ms =
      400.0 * static_cast<double>(kFixedBandMemoryMb) / static_cast<double>(kFullVcpuMemoryMb);
  s.workload = workloads::WorkloadSpec::make(
      workloads::WorkloadId::MatrixMult,
      {{"work_ms", util::format_double(base_work_ms)}});

  s.plan.rates = {10, 25, 50, 100, 200, 400, 800, 1000};
  s.plan.duration_per_rate_ms = 60'000;
  s.plan.drain_gap_ms = 60'000;
  s.plan.target = "sim";
  return s;
}

}  // namespace faasbench::sim

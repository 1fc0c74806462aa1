#include "faasbench/sim/service_law.hpp"

#include <algorithm>
#include <stdexcept>

namespace faasbench::sim {

double service_time_ms(const ServiceTimeLaw& law, std::span<const MemoryTier> tiers,
                       int memory_mb, double work_units) {
  if (memory_mb <= 0) throw std::invalid_argument("service_time: memory must be > 0");
  if (law.base_work_ms <= 0) throw std::invalid_argument("service_time: base work must be > 0");
  const double work = law.base_work_ms * work_units;
  switch (law.law) {
    case ScalingLaw::LinearWithCap: {
      // CPU share grows linearly with memory and saturates at one full vCPU.
      const double share =
          static_cast<double>(std::min(memory_mb, law.cap_memory_mb)) / law.cap_memory_mb;
      return work / share;
    }
    case ScalingLaw::TierTable: {
      for (const auto& t : tiers) {
        if (t.memory_mb == memory_mb) {
          return work * static_cast<double>(kReferenceMhz) / static_cast<double>(t.cpu_mhz);
        }
      }
      throw std::invalid_argument("service_time: no tier for " + std::to_string(memory_mb) +
                                  " MB");
    }
    case ScalingLaw::Flat:
      return work;
    case ScalingLaw::FixedBand:
      return work * static_cast<double>(kFullVcpuMemoryMb) /
             static_cast<double>(kFixedBandMemoryMb);
  }
  throw std::invalid_argument("service_time: bad law");
}

ServiceTimeLaw law_for(const ProviderProfile& profile, double base_work_ms) {
  ServiceTimeLaw law;
  law.law = profile.scaling_law;
  law.base_work_ms = base_work_ms;
  law.cap_memory_mb = kFullVcpuMemoryMb;
  return law;
}

}  // namespace faasbench::sim

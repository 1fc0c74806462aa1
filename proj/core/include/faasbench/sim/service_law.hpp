#pragma once

#include <span>

#include "faasbench/model/profile.hpp"

namespace faasbench::sim {

// Work is expressed as milliseconds at the reference CPU: one full vCPU,
// which the tier providers reach at their top 2400 MHz tier.
inline constexpr int kFullVcpuMemoryMb = 1792;
inline constexpr int kReferenceMhz = 2400;
// Midpoint of the 1024-2048 MB band the fixed-size provider behaves like.
inline constexpr int kFixedBandMemoryMb = 1536;

struct ServiceTimeLaw {
  ScalingLaw law{ScalingLaw::Flat};
  double base_work_ms{100.0};
  int cap_memory_mb{kFullVcpuMemoryMb};  // LinearWithCap only
};

// Deterministic execution time of `work_units` x base work at the given
// memory size. Throws std::invalid_argument for memory the law cannot map.
double service_time_ms(const ServiceTimeLaw& law, std::span<const MemoryTier> tiers,
                       int memory_mb, double work_units = 1.0);

// Convenience: law assembled from a profile plus a workload's nominal work.
ServiceTimeLaw law_for(const ProviderProfile& profile, double base_work_ms);

}  // namespace faasbench::sim

#include "faasbench/pricing/cost.hpp"

#include <stdexcept>

namespace faasbench::pricing {

void WorkloadPlan::validate() const {
  if (invocations_per_month < 0 || exec_time_ms < 0 || memory_used_mb < 0 ||
      memory_allocated_mb < 0 || payload_bytes_per_call < 0) {
    throw std::invalid_argument("workload plan fields must be non-negative");
  }
  if (memory_used_mb > memory_allocated_mb) {
    throw std::invalid_argument("memory_used_mb exceeds memory_allocated_mb");
  }
}

std::int64_t billable_exec_ms(const PricingRates& rates, std::int64_t exec_time_ms) {
  if (exec_time_ms < 0) throw std::invalid_argument("negative execution time");
  const std::int64_t g = rates.exec_rounding_ms;
  return (exec_time_ms + g - 1) / g * g;
}

int billable_memory_mb(const PricingRates& rates, int used_mb, int allocated_mb) {
  if (used_mb > allocated_mb) {
    throw std::invalid_argument("memory_used_mb exceeds memory_allocated_mb");
  }
  if (rates.memory_billing == MemoryBilling::RoundUpTo128MB) {
    return (used_mb + 127) / 128 * 128;
  }
  return allocated_mb;
}

namespace {

int tier_mhz_for(const ProviderProfile& profile, int memory_mb) {
  for (const auto& t : profile.memory_tiers) {
    if (t.memory_mb == memory_mb) return t.cpu_mhz;
  }
  throw std::invalid_argument(profile.name + ": no CPU tier for " +
                              std::to_string(memory_mb) + " MB");
}

}  // namespace

CostBreakdown compute_cost(const ProviderProfile& profile, const WorkloadPlan& plan) {
  plan.validate();
  if (!validate_memory(profile, plan.memory_allocated_mb)) {
    throw std::invalid_argument(profile.name + ": memory " +
                                std::to_string(plan.memory_allocated_mb) +
                                " MB is not deployable");
  }
  const PricingRates& rates = profile.pricing;
  const std::int64_t bill_ms = billable_exec_ms(rates, plan.exec_time_ms);
  const int bill_mb = billable_memory_mb(rates, plan.memory_used_mb, plan.memory_allocated_mb);

  // Per-call cost in pico-dollars, rounded half-up once, then scaled by the
  // invocation count so every component is exactly linear in it.
  const Money inv_call = rates.per_million_invocations.mul_div(1, 1'000'000);
  // (mb/1024 GB) * (ms/1000 s) * rate
  const Money gb_call = rates.per_gb_second.mul_div(
      static_cast<std::int64_t>(bill_mb) * bill_ms, 1'024'000);
  Money ghz_call{};
  if (profile.scaling_law == ScalingLaw::TierTable && rates.per_ghz_second.pico() > 0) {
    const int mhz = tier_mhz_for(profile, plan.memory_allocated_mb);
    // (mhz/1000 GHz) * (ms/1000 s) * rate
    ghz_call = rates.per_ghz_second.mul_div(static_cast<std::int64_t>(mhz) * bill_ms,
                                            1'000'000);
  }
  const Money bw_call =
      rates.per_gb_egress.mul_div(plan.payload_bytes_per_call, std::int64_t{1} << 30);

  CostBreakdown out;
  out.invocation_cost = inv_call.scaled(plan.invocations_per_month);
  out.gb_second_cost = gb_call.scaled(plan.invocations_per_month);
  out.ghz_second_cost = ghz_call.scaled(plan.invocations_per_month);
  out.bandwidth_cost = bw_call.scaled(plan.invocations_per_month);
  out.total = out.invocation_cost + out.gb_second_cost + out.ghz_second_cost +
              out.bandwidth_cost;
  return out;
}

}  // namespace faasbench::pricing

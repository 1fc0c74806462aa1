#pragma once

#include "faasbench/model/money.hpp"
#include "faasbench/model/profile.hpp"
#include "faasbench/pricing/plan.hpp"

namespace faasbench::pricing {

struct CostBreakdown {
  Money invocation_cost;
  Money gb_second_cost;
  Money ghz_second_cost;
  Money bandwidth_cost;
  Money total;  // exact sum of the four components
};

// Execution time rounded UP to the provider's billing granularity.
std::int64_t billable_exec_ms(const PricingRates& rates, std::int64_t exec_time_ms);

// Memory the provider bills for: the allocation, or actual usage rounded up
// to the next 128 MB step.
int billable_memory_mb(const PricingRates& rates, int used_mb, int allocated_mb);

// Monthly cost of `plan` on `profile`. Component costs are exactly linear in
// the invocation count: the per-call cost is fixed point (rounded half-up
// once) and scaled by the call count. Throws std::invalid_argument when the
// plan is invalid or its memory is not deployable on the provider.
CostBreakdown compute_cost(const ProviderProfile& profile, const WorkloadPlan& plan);

}  // namespace faasbench::pricing

#pragma once

#include <cstdint>

namespace faasbench::pricing {

// A planned monthly workload for the billing calculator.
struct WorkloadPlan {
  std::int64_t invocations_per_month{0};
  std::int64_t exec_time_ms{0};  // per call, before billing granularity
  int memory_used_mb{0};         // actual usage
  int memory_allocated_mb{0};    // configured size
  std::int64_t payload_bytes_per_call{0};

  void validate() const;  // throws std::invalid_argument
};

}  // namespace faasbench::pricing

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faasbench/model/money.hpp"

namespace faasbench {

// How CPU share scales with the memory configured for a function.
enum class ScalingLaw { LinearWithCap, TierTable, Flat, FixedBand };

enum class MemoryBilling { AsAllocated, RoundUpTo128MB };

const char* to_string(ScalingLaw law);
ScalingLaw scaling_law_from_string(const std::string& s);
const char* to_string(MemoryBilling b);
MemoryBilling memory_billing_from_string(const std::string& s);

struct MemoryTier {
  int memory_mb{0};
  int cpu_mhz{0};
  auto operator<=>(const MemoryTier&) const = default;
};

struct PricingRates {
  Money per_million_invocations;
  Money per_gb_second;
  Money per_ghz_second;  // zero for providers that do not bill CPU time
  Money per_gb_egress;
  int exec_rounding_ms{100};  // execution time is rounded UP to this
  MemoryBilling memory_billing{MemoryBilling::AsAllocated};

  void validate() const;  // throws std::invalid_argument
  bool operator==(const PricingRates&) const = default;
};

// Cold-start latency model for one runtime family.
struct ColdStartDist {
  enum class Kind { Normal, Uniform };
  Kind kind{Kind::Normal};
  // Normal: mean_ms with sigma = mean * spread_permille/1000, truncated at 0.
  std::int64_t mean_ms{0};
  int spread_permille{150};
  // Uniform: [lo_ms, hi_ms].
  std::int64_t lo_ms{0};
  std::int64_t hi_ms{0};

  static ColdStartDist normal(std::int64_t mean_ms, int spread_permille = 150);
  static ColdStartDist uniform(std::int64_t lo_ms, std::int64_t hi_ms);
  double mean() const;
  bool operator==(const ColdStartDist&) const = default;
};

struct DurationRangeMs {
  std::int64_t min_ms{0};
  std::int64_t max_ms{0};
  bool operator==(const DurationRangeMs&) const = default;
};

struct AutoscalePolicy {
  // Extra provisioning delay before the cold-start draw begins.
  std::int64_t spawn_latency_ms{0};
  // New instances per second the platform will start under pressure.
  double max_spawn_rate{1e6};
  // Observed ceiling, possibly below the documented max_instances.
  std::optional<int> effective_instance_cap;
  int queue_capacity{0};

  bool operator==(const AutoscalePolicy&) const = default;
};

// A named bundle of limits, scaling law, cold-start distributions,
// autoscaling policy and pricing rates for one cloud.
struct ProviderProfile {
  std::string name;
  std::string variant;  // azure only: "linux" (default) or "windows"
  std::vector<std::string> regions;
  int max_instances{0};
  bool concurrency_counts_queued{false};
  int memory_min_mb{0};
  int memory_max_mb{0};
  int memory_step_mb{0};
  std::vector<MemoryTier> memory_tiers;  // TierTable providers only
  ScalingLaw scaling_law{ScalingLaw::Flat};
  // Keyed by runtime family ("node", "python", "go", "dotnet", ...).
  // A "<family>@windows" entry takes precedence when variant == "windows".
  std::map<std::string, ColdStartDist> cold_start_ms;
  DurationRangeMs idle_recycle;
  PricingRates pricing;
  AutoscalePolicy scale_out;
  // Additive network base latency per region; regions absent from the map
  // fall back to kDefaultNetworkBaseMs.
  std::map<std::string, int> region_latency_ms;
  // Runtime labels known to be deployable (unknown labels warn, not fail).
  std::vector<std::string> runtime_allowlist;
  // Per runtime family multiplier on workload base work (e.g. ibm/go).
  std::map<std::string, double> runtime_work_factor;

  void validate() const;  // throws std::invalid_argument on broken invariants
  int effective_cap() const;
  const ColdStartDist& cold_start_for(const std::string& runtime_label) const;
  int network_base_ms(const std::string& region) const;
  double work_factor_for(const std::string& runtime_label) const;
  bool has_region(const std::string& region) const;
  bool runtime_known(const std::string& runtime_label) const;

  bool operator==(const ProviderProfile&) const = default;
};

// Fallback network base latency, the observed all-provider average.
inline constexpr int kDefaultNetworkBaseMs = 538;

// Lower-cased family token ("node", "python", "go", "dotnet", "java", ...)
// extracted from a free-form runtime label such as "node 10.x" or ".NET 2.1".
std::string runtime_family(const std::string& runtime_label);

// The four built-in providers: aws, azure, google, ibm. Deterministic.
std::vector<ProviderProfile> builtin_profiles();
ProviderProfile builtin_profile(const std::string& name);

// Memory size deployability check: tier membership for TierTable providers,
// range + step alignment otherwise.
bool validate_memory(const ProviderProfile& profile, int memory_mb);

}  // namespace faasbench

#pragma once

#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "faasbench/model/profile.hpp"
#include "faasbench/pricing/plan.hpp"

namespace faasbench::config {

YAML::Node profile_to_yaml(const ProviderProfile& profile);
// Parses a profile node. When `base` is given, present keys override the
// base value field by field (nested sections merge per key).
ProviderProfile profile_from_yaml(const YAML::Node& node,
                                  const ProviderProfile* base = nullptr);

std::string save_profiles(const std::vector<ProviderProfile>& profiles);

// Builtins with the file's `profiles:` section merged on top. An override
// keyed by an unknown name defines a brand-new profile and must be complete.
std::vector<ProviderProfile> effective_profiles(const YAML::Node& config_root);
std::vector<ProviderProfile> effective_profiles_from_file(const std::string& path);

// Cost plan files: shared scalars plus optional per-provider rows.
struct CostPlanRow {
  std::string provider;
  int memory_allocated_mb{0};
  std::int64_t exec_time_ms{0};
};

struct CostPlanFile {
  pricing::WorkloadPlan base;
  std::vector<CostPlanRow> rows;  // empty: evaluate base for chosen providers
};

CostPlanFile cost_plan_from_yaml(const YAML::Node& node);
CostPlanFile cost_plan_from_file(const std::string& path);

}  // namespace faasbench::config

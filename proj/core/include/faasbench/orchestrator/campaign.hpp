#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "faasbench/injector/plan.hpp"
#include "faasbench/model/profile.hpp"
#include "faasbench/workloads/workloads.hpp"

namespace faasbench::orchestrator {

enum class CampaignMode { Probe, Stress, ColdStart };

const char* to_string(CampaignMode m);
CampaignMode campaign_mode_from_string(const std::string& s);

// One provider x region x runtime x memory test matrix plus the mode that
// drives it.
struct Campaign {
  std::string run_id;
  CampaignMode mode{CampaignMode::Probe};
  std::uint64_t seed{0};
  workloads::WorkloadSpec workload{workloads::WorkloadSpec::make(
      workloads::WorkloadId::NetLatency)};

  std::vector<std::string> providers;
  // Per-provider regions; a provider missing here uses its first profile
  // region. The "generic" provider needs generic_base_url instead.
  std::map<std::string, std::vector<std::string>> regions;
  std::vector<std::string> runtimes;
  std::vector<int> memories;
  std::int64_t timeout_ms{30'000};
  std::string generic_base_url;

  // Probe mode.
  std::int64_t probe_interval_ms{5000};
  int probe_samples{100};
  // Stress mode (target filled per cell at run time).
  injector::StressPlan stress;
  // Cold-start mode: repetitions with forced recycling in between, plus a few
  // warm invocations per repetition so overheads have a baseline.
  int coldstart_repetitions{10};
  int coldstart_warm_probes{5};

  struct Cell {
    std::string provider;
    std::string region;
    std::string runtime_label;
    int memory_mb{0};
    std::string id() const;
  };

  // The expanded matrix. Throws when a cell fails validation (memory not
  // deployable, unknown provider/region). Unknown runtime labels are allowed
  // (they only warn).
  std::vector<Cell> cells(const std::vector<ProviderProfile>& profiles) const;
  void validate(const std::vector<ProviderProfile>& profiles) const;
};

Campaign campaign_from_yaml(const YAML::Node& node);
Campaign campaign_from_file(const std::string& path);

}  // namespace faasbench::orchestrator

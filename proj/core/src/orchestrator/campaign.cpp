#include "faasbench/orchestrator/campaign.hpp"

#include <algorithm>
#include <stdexcept>

namespace faasbench::orchestrator {

const char* to_string(CampaignMode m) {
  switch (m) {
    case CampaignMode::Probe: return "probe";
    case CampaignMode::Stress: return "stress";
    case CampaignMode::ColdStart: return "coldstart";
  }
  throw std::invalid_argument("bad campaign mode value");
}

CampaignMode campaign_mode_from_string(const std::string& s) {
  if (s == "probe") return CampaignMode::Probe;
  if (s == "stress") return CampaignMode::Stress;
  if (s == "coldstart") return CampaignMode::ColdStart;
  throw std::invalid_argument("unknown campaign mode: " + s);
}

std::string Campaign::Cell::id() const {
  std::string runtime = runtime_label;
  std::replace(runtime.begin(), runtime.end(), ' ', '_');
  std::replace(runtime.begin(), runtime.end(), '.', '_');
  return provider + "/" + region + "/" + runtime + "/" + std::to_string(memory_mb);
}

namespace {

const ProviderProfile* find_profile(const std::vector<ProviderProfile>& profiles,
                                    const std::string& name) {
  for (const auto& p : profiles) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

std::vector<Campaign::Cell> Campaign::cells(
    const std::vector<ProviderProfile>& profiles) const {
  if (providers.empty()) throw std::invalid_argument("campaign: no providers");
  if (runtimes.empty()) throw std::invalid_argument("campaign: no runtimes");
  if (memories.empty()) throw std::invalid_argument("campaign: no memories");
  std::vector<Cell> out;
  for (const auto& provider : providers) {
    const bool generic = provider == "generic";
    const ProviderProfile* profile = find_profile(profiles, provider);
    if (!generic && profile == nullptr) {
      throw std::invalid_argument("campaign: unknown provider " + provider);
    }
    if (generic && generic_base_url.empty()) {
      throw std::invalid_argument("campaign: generic provider needs generic_base_url");
    }
    std::vector<std::string> cell_regions;
    auto it = regions.find(provider);
    if (it != regions.end() && !it->second.empty()) {
      cell_regions = it->second;
    } else if (generic) {
      cell_regions = {"local"};
    } else {
      cell_regions = {profile->regions.front()};
    }
    for (const auto& region : cell_regions) {
      if (!generic && !profile->has_region(region)) {
        throw std::invalid_argument("campaign: " + provider + " has no region " + region);
      }
      for (const auto& runtime : runtimes) {
        for (int memory : memories) {
          if (!generic && !validate_memory(*profile, memory)) {
            throw std::invalid_argument("campaign: " + std::to_string(memory) +
                                        " MB is not deployable on " + provider);
          }
          out.push_back({provider, region, runtime, memory});
        }
      }
    }
  }
  return out;
}

void Campaign::validate(const std::vector<ProviderProfile>& profiles) const {
  if (run_id.empty()) throw std::invalid_argument("campaign: run_id missing");
  (void)cells(profiles);
  workload.validate();
  if (mode == CampaignMode::Probe) {
    if (probe_interval_ms <= 0) throw std::invalid_argument("campaign: probe interval <= 0");
    if (probe_samples < 1) throw std::invalid_argument("campaign: probe samples < 1");
  }
  if (mode == CampaignMode::Stress) {
    injector::StressPlan check = stress;
    check.target = "pending";
    check.validate();
  }
  if (mode == CampaignMode::ColdStart) {
    if (coldstart_repetitions < 1 || coldstart_warm_probes < 1) {
      throw std::invalid_argument("campaign: coldstart repetitions/probes must be >= 1");
    }
  }
}

Campaign campaign_from_yaml(const YAML::Node& n) {
  Campaign c;
  if (!n["run_id"]) throw std::invalid_argument("campaign: run_id required");
  c.run_id = n["run_id"].as<std::string>();
  if (n["mode"]) c.mode = campaign_mode_from_string(n["mode"].as<std::string>());
  if (n["seed"]) c.seed = n["seed"].as<std::uint64_t>();
  if (n["workload"]) {
    std::map<std::string, std::string> params;
    if (n["workload_params"]) {
      for (const auto& kv : n["workload_params"]) {
        params[kv.first.as<std::string>()] = kv.second.as<std::string>();
      }
    }
    c.workload = workloads::WorkloadSpec::make(
        workloads::workload_id_from_string(n["workload"].as<std::string>()), params);
    if (n["custom_entry"]) c.workload.custom_entry = n["custom_entry"].as<std::string>();
  }
  if (n["providers"]) c.providers = n["providers"].as<std::vector<std::string>>();
  if (n["regions"]) {
    for (const auto& kv : n["regions"]) {
      c.regions[kv.first.as<std::string>()] = kv.second.as<std::vector<std::string>>();
    }
  }
  if (n["runtimes"]) c.runtimes = n["runtimes"].as<std::vector<std::string>>();
  if (n["memories"]) c.memories = n["memories"].as<std::vector<int>>();
  if (n["timeout_ms"]) c.timeout_ms = n["timeout_ms"].as<std::int64_t>();
  if (n["generic_base_url"]) c.generic_base_url = n["generic_base_url"].as<std::string>();
  if (n["probe"]) {
    const auto& p = n["probe"];
    if (p["interval_ms"]) c.probe_interval_ms = p["interval_ms"].as<std::int64_t>();
    if (p["samples"]) c.probe_samples = p["samples"].as<int>();
  }
  if (n["stress"]) {
    const auto& s = n["stress"];
    if (s["rates"]) c.stress.rates = s["rates"].as<std::vector<double>>();
    if (s["duration_ms"]) c.stress.duration_per_rate_ms = s["duration_ms"].as<std::int64_t>();
    if (s["drain_gap_ms"]) c.stress.drain_gap_ms = s["drain_gap_ms"].as<std::int64_t>();
    if (s["connections"]) c.stress.connections = s["connections"].as<int>();
    if (s["timeout_ms"]) c.stress.timeout_ms = s["timeout_ms"].as<std::int64_t>();
  }
  if (n["coldstart"]) {
    const auto& cs = n["coldstart"];
    if (cs["repetitions"]) c.coldstart_repetitions = cs["repetitions"].as<int>();
    if (cs["warm_probes"]) c.coldstart_warm_probes = cs["warm_probes"].as<int>();
  }
  return c;
}

Campaign campaign_from_file(const std::string& path) {
  return campaign_from_yaml(YAML::LoadFile(path));
}

}  // namespace faasbench::orchestrator

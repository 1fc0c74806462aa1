#include "faasbench/model/profile.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace faasbench {

const char* to_string(ScalingLaw law) {
  switch (law) {
    case ScalingLaw::LinearWithCap: return "linear_with_cap";
    case ScalingLaw::TierTable: return "tier_table";
    case ScalingLaw::Flat: return "flat";
    case ScalingLaw::FixedBand: return "fixed_band";
  }
  throw std::invalid_argument("bad scaling law value");
}

ScalingLaw scaling_law_from_string(const std::string& s) {
  if (s == "linear_with_cap") return ScalingLaw::LinearWithCap;
  if (s == "tier_table") return ScalingLaw::TierTable;
  if (s == "flat") return ScalingLaw::Flat;
  if (s == "fixed_band") return ScalingLaw::FixedBand;
  throw std::invalid_argument("unknown scaling law: " + s);
}

const char* to_string(MemoryBilling b) {
  return b == MemoryBilling::AsAllocated ? "as_allocated" : "round_up_to_128mb";
}

MemoryBilling memory_billing_from_string(const std::string& s) {
  if (s == "as_allocated") return MemoryBilling::AsAllocated;
  if (s == "round_up_to_128mb") return MemoryBilling::RoundUpTo128MB;
  throw std::invalid_argument("unknown memory billing mode: " + s);
}

void PricingRates::validate() const {
  if (per_million_invocations.pico() < 0 || per_gb_second.pico() < 0 ||
      per_ghz_second.pico() < 0 || per_gb_egress.pico() < 0) {
    throw std::invalid_argument("pricing rates must be non-negative");
  }
  if (exec_rounding_ms != 1 && exec_rounding_ms != 100) {
    throw std::invalid_argument("exec_rounding_ms must be 1 or 100");
  }
}

ColdStartDist ColdStartDist::normal(std::int64_t mean_ms, int spread_permille) {
  ColdStartDist d;
  d.kind = Kind::Normal;
  d.mean_ms = mean_ms;
  d.spread_permille = spread_permille;
  return d;
}

ColdStartDist ColdStartDist::uniform(std::int64_t lo_ms, std::int64_t hi_ms) {
  ColdStartDist d;
  d.kind = Kind::Uniform;
  d.lo_ms = lo_ms;
  d.hi_ms = hi_ms;
  return d;
}

double ColdStartDist::mean() const {
  if (kind == Kind::Normal) return static_cast<double>(mean_ms);
  return (static_cast<double>(lo_ms) + static_cast<double>(hi_ms)) / 2.0;
}

std::string runtime_family(const std::string& runtime_label) {
  std::string lower;
  lower.reserve(runtime_label.size());
  for (char c : runtime_label) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower.rfind(".net", 0) == 0 || lower.rfind("dotnet", 0) == 0 ||
      lower.rfind("net", 0) == 0 || lower.rfind("csharp", 0) == 0) {
    return "dotnet";
  }
  std::string prefix;
  for (char c : lower) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      prefix.push_back(c);
    } else {
      break;
    }
  }
  if (prefix.rfind("node", 0) == 0) return "node";
  if (prefix.rfind("py", 0) == 0) return "python";
  if (prefix == "golang") return "go";
  return prefix.empty() ? "unknown" : prefix;
}

void ProviderProfile::validate() const {
  if (name.empty()) throw std::invalid_argument("profile name empty");
  if (max_instances <= 0) throw std::invalid_argument(name + ": max_instances must be > 0");
  if (memory_min_mb > memory_max_mb) {
    throw std::invalid_argument(name + ": memory_min_mb > memory_max_mb");
  }
  if (memory_step_mb <= 0) throw std::invalid_argument(name + ": memory_step_mb must be > 0");
  for (const auto& t : memory_tiers) {
    if (t.memory_mb < memory_min_mb || t.memory_mb > memory_max_mb) {
      throw std::invalid_argument(name + ": memory tier outside [min,max]");
    }
  }
  if (scaling_law == ScalingLaw::TierTable) {
    if (memory_tiers.empty()) {
      throw std::invalid_argument(name + ": tier_table law requires memory_tiers");
    }
    if (!std::is_sorted(memory_tiers.begin(), memory_tiers.end(),
                        [](const MemoryTier& a, const MemoryTier& b) {
                          return a.memory_mb < b.memory_mb;
                        })) {
      throw std::invalid_argument(name + ": memory_tiers must be sorted by memory");
    }
  }
  if (regions.empty()) throw std::invalid_argument(name + ": no regions");
  pricing.validate();
  if (scale_out.max_spawn_rate <= 0) {
    throw std::invalid_argument(name + ": max_spawn_rate must be > 0");
  }
  if (scale_out.effective_instance_cap &&
      *scale_out.effective_instance_cap > max_instances) {
    throw std::invalid_argument(name + ": effective_instance_cap > max_instances");
  }
  if (scale_out.queue_capacity < 0) {
    throw std::invalid_argument(name + ": queue_capacity must be >= 0");
  }
  if (idle_recycle.min_ms > idle_recycle.max_ms) {
    throw std::invalid_argument(name + ": idle_recycle min > max");
  }
  for (const auto& [family, dist] : cold_start_ms) {
    if (family.empty()) throw std::invalid_argument(name + ": empty cold-start key");
    if (dist.kind == ColdStartDist::Kind::Normal && dist.mean_ms < 0) {
      throw std::invalid_argument(name + ": negative cold-start mean");
    }
    if (dist.kind == ColdStartDist::Kind::Uniform && dist.lo_ms > dist.hi_ms) {
      throw std::invalid_argument(name + ": cold-start uniform lo > hi");
    }
  }
}

int ProviderProfile::effective_cap() const {
  return scale_out.effective_instance_cap
             ? std::min(*scale_out.effective_instance_cap, max_instances)
             : max_instances;
}

const ColdStartDist& ProviderProfile::cold_start_for(const std::string& runtime_label) const {
  const std::string family = runtime_family(runtime_label);
  if (variant == "windows") {
    auto it = cold_start_ms.find(family + "@windows");
    if (it != cold_start_ms.end()) return it->second;
  }
  auto it = cold_start_ms.find(family);
  if (it != cold_start_ms.end()) return it->second;
  it = cold_start_ms.find("*");
  if (it != cold_start_ms.end()) return it->second;
  throw std::invalid_argument(name + ": no cold-start distribution for " + runtime_label);
}

int ProviderProfile::network_base_ms(const std::string& region) const {
  auto it = region_latency_ms.find(region);
  return it != region_latency_ms.end() ? it->second : kDefaultNetworkBaseMs;
}

double ProviderProfile::work_factor_for(const std::string& runtime_label) const {
  auto it = runtime_work_factor.find(runtime_family(runtime_label));
  return it != runtime_work_factor.end() ? it->second : 1.0;
}

bool ProviderProfile::has_region(const std::string& region) const {
  return std::find(regions.begin(), regions.end(), region) != regions.end();
}

bool ProviderProfile::runtime_known(const std::string& runtime_label) const {
  return std::find(runtime_allowlist.begin(), runtime_allowlist.end(), runtime_label) !=
         runtime_allowlist.end();
}

namespace {

ProviderProfile make_aws() {
  ProviderProfile p;
  p.name = "aws";
  p.regions = {"eu-central-1", "eu-west-1", "us-east-1", "us-west-2", "ap-southeast-1"};
  p.region_latency_ms = {{"eu-central-1", 80},
                         {"eu-west-1", 98},
                         {"us-east-1", 132},
                         {"us-west-2", 190},
                         {"ap-southeast-1", 690}};
  p.max_instances = 3000;
  p.memory_min_mb = 128;
  p.memory_max_mb = 3008;
  p.memory_step_mb = 64;
  p.scaling_law = ScalingLaw::LinearWithCap;
  p.cold_start_ms = {{"node", ColdStartDist::normal(335)},
                     {"python", ColdStartDist::normal(335)},
                     {"go", ColdStartDist::normal(335)},
                     {"dotnet", ColdStartDist::normal(1739)},
                     {"*", ColdStartDist::normal(335)}};
  p.idle_recycle = {9 * 60'000, 11 * 60'000};
  p.pricing.per_million_invocations = Money::parse_dollars("0.20");
  p.pricing.per_gb_second = Money::parse_dollars("0.0000166667");
  p.pricing.per_ghz_second = Money{};
  p.pricing.per_gb_egress = Money::parse_dollars("0.09");
  p.pricing.exec_rounding_ms = 100;
  p.pricing.memory_billing = MemoryBilling::AsAllocated;
  p.scale_out.spawn_latency_ms = 0;
  p.scale_out.max_spawn_rate = 1e6;
  p.scale_out.queue_capacity = 30'000;
  p.runtime_allowlist = {"node 10.x", "node 12.x", "python 2.7", "python 3.6",
                         "python 3.7", "python 3.8", "go 1.11", "go 1.13",
                         "dotnet 2.1", "java 8", "java 11", "ruby 2.5", "ruby 2.7"};
  return p;
}

ProviderProfile make_azure() {
  ProviderProfile p;
  p.name = "azure";
  p.variant = "linux";
  p.regions = {"west-europe", "east-us", "southeast-asia", "australia-east"};
  p.region_latency_ms = {{"west-europe", 136},
                         {"east-us", 226},
                         {"southeast-asia", 740},
                         {"australia-east", 1180}};
  p.max_instances = 200;
  p.memory_min_mb = 128;
  p.memory_max_mb = 1536;
  p.memory_step_mb = 128;
  p.scaling_law = ScalingLaw::FixedBand;
  p.cold_start_ms = {{"*", ColdStartDist::uniform(2000, 5000)},
                     {"dotnet@windows", ColdStartDist::normal(1917)}};
  p.idle_recycle = {10 * 60'000, 20 * 60'000};
  p.pricing.per_million_invocations = Money::parse_dollars("0.20");
  p.pricing.per_gb_second = Money::parse_dollars("0.000016");
  p.pricing.per_ghz_second = Money{};
  p.pricing.per_gb_egress = Money::parse_dollars("0.087");
  p.pricing.exec_rounding_ms = 1;
  p.pricing.memory_billing = MemoryBilling::RoundUpTo128MB;
  p.scale_out.spawn_latency_ms = 0;
  p.scale_out.max_spawn_rate = 0.05;
  p.scale_out.effective_instance_cap = 12;
  p.scale_out.queue_capacity = 120;
  p.runtime_allowlist = {"node 8.x", "node 10.x", "node 12.x", "python 3.6",
                         "python 3.7", "python 3.8", "dotnet 2.2", "dotnet 3.1",
                         "java 8"};
  return p;
}

ProviderProfile make_google() {
  ProviderProfile p;
  p.name = "google";
  p.regions = {"europe-west1", "us-central1", "asia-northeast1", "asia-south1",
               "asia-east2"};
  p.region_latency_ms = {{"europe-west1", 162},
                         {"us-central1", 248},
                         {"asia-northeast1", 1020},
                         {"asia-south1", 1370},
                         {"asia-east2", 1770}};
  p.max_instances = 1000;
  p.memory_min_mb = 128;
  p.memory_max_mb = 2048;
  p.memory_step_mb = 128;
  p.memory_tiers = {{128, 200}, {256, 400}, {512, 800}, {1024, 1400}, {2048, 2400}};
  p.scaling_law = ScalingLaw::TierTable;
  p.cold_start_ms = {{"*", ColdStartDist::uniform(2000, 3000)}};
  p.idle_recycle = {10 * 60'000, 10 * 3'600'000};
  p.pricing.per_million_invocations = Money::parse_dollars("0.40");
  p.pricing.per_gb_second = Money::parse_dollars("0.0000025");
  p.pricing.per_ghz_second = Money::parse_dollars("0.00001");
  p.pricing.per_gb_egress = Money::parse_dollars("0.12");
  p.pricing.exec_rounding_ms = 100;
  p.pricing.memory_billing = MemoryBilling::AsAllocated;
  p.scale_out.spawn_latency_ms = 0;
  p.scale_out.max_spawn_rate = 2.0;
  p.scale_out.queue_capacity = 10'000;
  p.runtime_allowlist = {"node 6.x", "node 8.x", "node 10.x", "python 3.7",
                         "go 1.11", "go 1.13"};
  return p;
}

ProviderProfile make_ibm() {
  ProviderProfile p;
  p.name = "ibm";
  p.regions = {"eu-de", "eu-gb", "us-south", "us-east", "au-syd"};
  p.region_latency_ms = {{"eu-de", 122},
                         {"eu-gb", 140},
                         {"us-south", 266},
                         {"us-east", 284},
                         {"au-syd", 1368}};
  p.max_instances = 1000;
  p.concurrency_counts_queued = true;
  p.memory_min_mb = 128;
  p.memory_max_mb = 2048;
  p.memory_step_mb = 32;
  p.scaling_law = ScalingLaw::Flat;
  p.cold_start_ms = {{"node", ColdStartDist::normal(935)},
                     {"python", ColdStartDist::normal(935)},
                     {"go", ColdStartDist::normal(935)},
                     {"dotnet", ColdStartDist::normal(1739)},
                     {"*", ColdStartDist::normal(935)}};
  p.idle_recycle = {9 * 60'000, 11 * 60'000};
  p.pricing.per_million_invocations = Money{};
  p.pricing.per_gb_second = Money::parse_dollars("0.000017");
  p.pricing.per_ghz_second = Money{};
  p.pricing.per_gb_egress = Money{};
  p.pricing.exec_rounding_ms = 100;
  p.pricing.memory_billing = MemoryBilling::AsAllocated;
  p.scale_out.spawn_latency_ms = 0;
  p.scale_out.max_spawn_rate = 1.0;
  p.scale_out.queue_capacity = 10'000;
  p.runtime_allowlist = {"node 8.x", "node 10.x", "python 2.7", "python 3.6",
                         "python 3.7", "go 1.11", "dotnet 2.2", "java 8",
                         "ruby 2.5", "swift 4.2", "php 7.3"};
  p.runtime_work_factor = {{"go", 3.0}};
  return p;
}

}  // namespace

std::vector<ProviderProfile> builtin_profiles() {
  std::vector<ProviderProfile> all{make_aws(), make_azure(), make_google(), make_ibm()};
  for (const auto& p : all) p.validate();
  return all;
}

ProviderProfile builtin_profile(const std::string& name) {
  for (auto& p : builtin_profiles()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown builtin profile: " + name);
}

bool validate_memory(const ProviderProfile& profile, int memory_mb) {
  if (profile.scaling_law == ScalingLaw::TierTable) {
    return std::any_of(profile.memory_tiers.begin(), profile.memory_tiers.end(),
                       [&](const MemoryTier& t) { return t.memory_mb == memory_mb; });
  }
  if (memory_mb < profile.memory_min_mb || memory_mb > profile.memory_max_mb) return false;
  return (memory_mb - profile.memory_min_mb) % profile.memory_step_mb == 0;
}

}  // namespace faasbench

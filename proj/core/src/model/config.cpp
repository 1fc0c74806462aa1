#include "faasbench/model/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace faasbench::config {

namespace {

YAML::Node cold_dist_to_yaml(const ColdStartDist& d) {
  YAML::Node n;
  if (d.kind == ColdStartDist::Kind::Normal) {
    n["normal"].push_back(d.mean_ms);
    n["normal"].push_back(d.spread_permille);
  } else {
    n["uniform"].push_back(d.lo_ms);
    n["uniform"].push_back(d.hi_ms);
  }
  return n;
}

ColdStartDist cold_dist_from_yaml(const YAML::Node& n) {
  if (n["normal"]) {
    const auto& v = n["normal"];
    if (!v.IsSequence() || v.size() != 2) {
      throw std::invalid_argument("cold-start normal wants [mean_ms, spread_permille]");
    }
    return ColdStartDist::normal(v[0].as<std::int64_t>(), v[1].as<int>());
  }
  if (n["uniform"]) {
    const auto& v = n["uniform"];
    if (!v.IsSequence() || v.size() != 2) {
      throw std::invalid_argument("cold-start uniform wants [lo_ms, hi_ms]");
    }
    return ColdStartDist::uniform(v[0].as<std::int64_t>(), v[1].as<std::int64_t>());
  }
  throw std::invalid_argument("cold-start distribution needs normal: or uniform:");
}

template <typename T>
void read_if(const YAML::Node& n, const char* key, T& out) {
  if (n[key]) out = n[key].as<T>();
}

void read_money_if(const YAML::Node& n, const char* key, Money& out) {
  if (n[key]) out = Money::parse_dollars(n[key].as<std::string>());
}

}  // namespace

YAML::Node profile_to_yaml(const ProviderProfile& p) {
  YAML::Node n;
  n["name"] = p.name;
  if (!p.variant.empty()) n["variant"] = p.variant;
  n["regions"] = p.regions;
  n["max_instances"] = p.max_instances;
  n["concurrency_counts_queued"] = p.concurrency_counts_queued;
  n["memory_min_mb"] = p.memory_min_mb;
  n["memory_max_mb"] = p.memory_max_mb;
  n["memory_step_mb"] = p.memory_step_mb;
  if (!p.memory_tiers.empty()) {
    for (const auto& t : p.memory_tiers) {
      YAML::Node tier;
      tier.push_back(t.memory_mb);
      tier.push_back(t.cpu_mhz);
      tier.SetStyle(YAML::EmitterStyle::Flow);
      n["memory_tiers"].push_back(tier);
    }
  }
  n["scaling_law"] = to_string(p.scaling_law);
  for (const auto& [family, dist] : p.cold_start_ms) {
    n["cold_start_ms"][family] = cold_dist_to_yaml(dist);
  }
  n["idle_recycle"]["min_ms"] = p.idle_recycle.min_ms;
  n["idle_recycle"]["max_ms"] = p.idle_recycle.max_ms;
  YAML::Node pr;
  pr["per_million_invocations"] = p.pricing.per_million_invocations.to_exact_string();
  pr["per_gb_second"] = p.pricing.per_gb_second.to_exact_string();
  pr["per_ghz_second"] = p.pricing.per_ghz_second.to_exact_string();
  pr["per_gb_egress"] = p.pricing.per_gb_egress.to_exact_string();
  pr["exec_rounding_ms"] = p.pricing.exec_rounding_ms;
  pr["memory_billing"] = to_string(p.pricing.memory_billing);
  n["pricing"] = pr;
  YAML::Node so;
  so["spawn_latency_ms"] = p.scale_out.spawn_latency_ms;
  so["max_spawn_rate"] = p.scale_out.max_spawn_rate;
  if (p.scale_out.effective_instance_cap) {
    so["effective_instance_cap"] = *p.scale_out.effective_instance_cap;
  }
  so["queue_capacity"] = p.scale_out.queue_capacity;
  n["scale_out"] = so;
  for (const auto& [region, ms] : p.region_latency_ms) n["region_latency_ms"][region] = ms;
  n["runtime_allowlist"] = p.runtime_allowlist;
  for (const auto& [family, f] : p.runtime_work_factor) n["runtime_work_factor"][family] = f;
  return n;
}

ProviderProfile profile_from_yaml(const YAML::Node& n, const ProviderProfile* base) {
  ProviderProfile p = base ? *base : ProviderProfile{};
  read_if(n, "name", p.name);
  read_if(n, "variant", p.variant);
  read_if(n, "regions", p.regions);
  read_if(n, "max_instances", p.max_instances);
  read_if(n, "concurrency_counts_queued", p.concurrency_counts_queued);
  read_if(n, "memory_min_mb", p.memory_min_mb);
  read_if(n, "memory_max_mb", p.memory_max_mb);
  read_if(n, "memory_step_mb", p.memory_step_mb);
  if (n["memory_tiers"]) {
    p.memory_tiers.clear();
    for (const auto& tier : n["memory_tiers"]) {
      p.memory_tiers.push_back({tier[0].as<int>(), tier[1].as<int>()});
    }
  }
  if (n["scaling_law"]) {
    p.scaling_law = scaling_law_from_string(n["scaling_law"].as<std::string>());
  }
  if (n["cold_start_ms"]) {
    for (const auto& kv : n["cold_start_ms"]) {
      p.cold_start_ms[kv.first.as<std::string>()] = cold_dist_from_yaml(kv.second);
    }
  }
  if (n["idle_recycle"]) {
    read_if(n["idle_recycle"], "min_ms", p.idle_recycle.min_ms);
    read_if(n["idle_recycle"], "max_ms", p.idle_recycle.max_ms);
  }
  if (n["pricing"]) {
    const auto& pr = n["pricing"];
    read_money_if(pr, "per_million_invocations", p.pricing.per_million_invocations);
    read_money_if(pr, "per_gb_second", p.pricing.per_gb_second);
    read_money_if(pr, "per_ghz_second", p.pricing.per_ghz_second);
    read_money_if(pr, "per_gb_egress", p.pricing.per_gb_egress);
    read_if(pr, "exec_rounding_ms", p.pricing.exec_rounding_ms);
    if (pr["memory_billing"]) {
      p.pricing.memory_billing =
          memory_billing_from_string(pr["memory_billing"].as<std::string>());
    }
  }
  if (n["scale_out"]) {
    const auto& so = n["scale_out"];
    read_if(so, "spawn_latency_ms", p.scale_out.spawn_latency_ms);
    read_if(so, "max_spawn_rate", p.scale_out.max_spawn_rate);
    if (so["effective_instance_cap"]) {
      p.scale_out.effective_instance_cap = so["effective_instance_cap"].as<int>();
    }
    read_if(so, "queue_capacity", p.scale_out.queue_capacity);
  }
  if (n["region_latency_ms"]) {
    for (const auto& kv : n["region_latency_ms"]) {
      p.region_latency_ms[kv.first.as<std::string>()] = kv.second.as<int>();
    }
  }
  read_if(n, "runtime_allowlist", p.runtime_allowlist);
  if (n["runtime_work_factor"]) {
    for (const auto& kv : n["runtime_work_factor"]) {
      p.runtime_work_factor[kv.first.as<std::string>()] = kv.second.as<double>();
    }
  }
  p.validate();
  return p;
}

std::string save_profiles(const std::vector<ProviderProfile>& profiles) {
  YAML::Node root;
  for (const auto& p : profiles) root["profiles"][p.name] = profile_to_yaml(p);
  std::ostringstream out;
  out << root << "\n";
  return out.str();
}

std::vector<ProviderProfile> effective_profiles(const YAML::Node& config_root) {
  std::vector<ProviderProfile> out = builtin_profiles();
  if (!config_root || !config_root["profiles"]) return out;
  for (const auto& kv : config_root["profiles"]) {
    const std::string name = kv.first.as<std::string>();
    ProviderProfile* existing = nullptr;
    for (auto& p : out) {
      if (p.name == name) existing = &p;
    }
    if (existing) {
      *existing = profile_from_yaml(kv.second, existing);
      existing->name = name;
    } else {
      ProviderProfile p = profile_from_yaml(kv.second);
      p.name = name;
      p.validate();
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<ProviderProfile> effective_profiles_from_file(const std::string& path) {
  return effective_profiles(YAML::LoadFile(path));
}

CostPlanFile cost_plan_from_yaml(const YAML::Node& n) {
  CostPlanFile f;
  read_if(n, "invocations_per_month", f.base.invocations_per_month);
  read_if(n, "exec_time_ms", f.base.exec_time_ms);
  read_if(n, "memory_used_mb", f.base.memory_used_mb);
  read_if(n, "memory_allocated_mb", f.base.memory_allocated_mb);
  read_if(n, "payload_bytes_per_call", f.base.payload_bytes_per_call);
  if (n["rows"]) {
    for (const auto& r : n["rows"]) {
      CostPlanRow row;
      row.provider = r["provider"].as<std::string>();
      row.memory_allocated_mb = r["memory_allocated_mb"].as<int>();
      row.exec_time_ms = r["exec_time_ms"].as<std::int64_t>();
      f.rows.push_back(std::move(row));
    }
  }
  return f;
}

CostPlanFile cost_plan_from_file(const std::string& path) {
  return cost_plan_from_yaml(YAML::LoadFile(path));
}

}  // namespace faasbench::config

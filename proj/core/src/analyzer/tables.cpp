#include "faasbench/analyzer/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "faasbench/injector/plan.hpp"

namespace faasbench::analyzer {

std::vector<ScalingRow> scaling_table(
    const std::vector<std::pair<int, double>>& memory_exec_ms) {
  std::map<int, std::vector<double>> groups;
  for (const auto& [memory_mb, exec_ms] : memory_exec_ms) {
    groups[memory_mb].push_back(exec_ms);
  }
  std::vector<ScalingRow> rows;
  rows.reserve(groups.size());
  for (const auto& [memory_mb, values] : groups) {
    ScalingRow row;
    row.memory_mb = memory_mb;
    row.count = static_cast<std::int64_t>(values.size());
    double sum = 0;
    for (double v : values) sum += v;
    row.mean_ms = sum / static_cast<double>(values.size());
    double sq = 0;
    for (double v : values) sq += (v - row.mean_ms) * (v - row.mean_ms);
    row.stddev_ms = values.size() > 1
                        ? std::sqrt(sq / static_cast<double>(values.size() - 1))
                        : 0.0;
    rows.push_back(row);
  }
  for (auto& row : rows) {
    auto doubled = groups.find(row.memory_mb * 2);
    if (doubled == groups.end() || row.mean_ms <= 0) continue;
    double sum = 0;
    for (double v : doubled->second) sum += v;
    const double doubled_mean = sum / static_cast<double>(doubled->second.size());
    if (doubled_mean > 0) row.doubling_ratio = row.mean_ms / doubled_mean;
  }
  return rows;
}

std::vector<SaturationRow> saturation_table(const std::vector<StressSummary>& results) {
  std::vector<SaturationRow> rows;
  for (const auto& r : results) {
    if (r.goal_rps <= 0) continue;  // dropped by validation
    const injector::Shortfall s = injector::shortfall(r.goal_rps, r.achieved_rps);
    if (!s.long_tail) continue;
    rows.push_back({r.provider, r.runtime, r.goal_rps, r.achieved_rps, s.percent});
  }
  return rows;
}

std::vector<std::pair<std::int64_t, int>> instance_trace(
    const std::vector<std::pair<std::int64_t, int>>& sim_trace, bool available) {
  if (!available) {
    throw std::runtime_error(
        "instance trace unsupported: target exposes no instance metrics");
  }
  return sim_trace;
}

}  // namespace faasbench::analyzer

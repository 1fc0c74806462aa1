#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace faasbench::analyzer {

struct ScalingRow {
  int memory_mb{0};
  std::int64_t count{0};
  double mean_ms{0};
  double stddev_ms{0};
  // mean(memory) / mean(2 x memory), present when the doubled size exists.
  std::optional<double> doubling_ratio;
};

// Per-memory execution-time summary, sorted by memory, with a
// doubling-ratio column. Input: (memory_mb, exec_time_ms) observations.
std::vector<ScalingRow> scaling_table(
    const std::vector<std::pair<int, double>>& memory_exec_ms);

struct StressSummary {
  std::string provider;
  std::string runtime;
  double goal_rps{0};
  double achieved_rps{0};
};

struct SaturationRow {
  std::string provider;
  std::string runtime;
  double goal_rps{0};
  double achieved_rps{0};
  double percent{0};
};

// Rows whose achieved throughput fell strictly below 90% of the goal.
// Entries with goal <= 0 are dropped by validation.
std::vector<SaturationRow> saturation_table(const std::vector<StressSummary>& results);

// (timestamp ns, active instances) series for plotting scale-out behaviour.
// `available` is false for targets that expose no instance metrics (generic
// HTTP endpoints) — then the call throws std::runtime_error.
std::vector<std::pair<std::int64_t, int>> instance_trace(
    const std::vector<std::pair<std::int64_t, int>>& sim_trace, bool available);

}  // namespace faasbench::analyzer

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "faasbench/injector/histogram.hpp"
#include "faasbench/model/deployment.hpp"

namespace faasbench::injector {

// Low-rate baseline measurement: one request per target per interval.
struct ProbePlan {
  std::vector<std::string> targets;
  std::int64_t interval_ms{5000};
  int samples_per_target{100};
  std::int64_t timeout_ms{30'000};

  void validate() const;  // throws std::invalid_argument
};

// Constant-throughput load steps with open-loop scheduling.
struct StressPlan {
  std::string target;
  std::vector<double> rates{10, 25, 50, 100, 200, 400, 800, 1000};
  std::int64_t duration_per_rate_ms{60'000};
  // 0 = auto: 2 * rate * expected latency, clamped to [4, 512].
  int connections{0};
  std::int64_t drain_gap_ms{60'000};
  std::int64_t timeout_ms{30'000};
  double expected_latency_s{0.05};

  void validate() const;  // throws std::invalid_argument
  int connections_for(double rate) const;
};

struct RateResult {
  double goal_rps{0};
  double achieved_rps{0};
  LatencyHistogram histogram;
  std::map<SampleStatus, std::int64_t> status_counts;
  std::int64_t scheduled{0};
  std::int64_t recorded{0};
};

struct Shortfall {
  double percent{0};
  bool long_tail{false};
};

// percent = achieved/goal * 100; long_tail when strictly below 90%.
Shortfall shortfall(double goal_rps, double achieved_rps);

using SampleSink = std::function<void(const Sample&)>;

}  // namespace faasbench::injector

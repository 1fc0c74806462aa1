#include "faasbench/injector/plan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace faasbench::injector {

void ProbePlan::validate() const {
  if (interval_ms <= 0) throw std::invalid_argument("probe interval must be > 0");
  if (samples_per_target < 1) throw std::invalid_argument("probe samples must be >= 1");
  if (timeout_ms <= 0) throw std::invalid_argument("probe timeout must be > 0");
}

void StressPlan::validate() const {
  if (target.empty()) throw std::invalid_argument("stress target missing");
  if (rates.empty()) throw std::invalid_argument("stress rates empty");
  for (double r : rates) {
    if (r <= 0) throw std::invalid_argument("stress rates must be > 0");
  }
  if (std::adjacent_find(rates.begin(), rates.end(),
                         [](double a, double b) { return b <= a; }) != rates.end()) {
    throw std::invalid_argument("stress rates must be strictly increasing");
  }
  if (duration_per_rate_ms <= 0) throw std::invalid_argument("stress duration must be > 0");
  if (connections < 0) throw std::invalid_argument("connections must be >= 0");
  if (drain_gap_ms < 0) throw std::invalid_argument("drain gap must be >= 0");
  if (timeout_ms <= 0) throw std::invalid_argument("timeout must be > 0");
}

int StressPlan::connections_for(double rate) const {
  if (connections > 0) return connections;
  const double suggested = 2.0 * rate * expected_latency_s;
  return static_cast<int>(std::clamp(suggested, 4.0, 512.0));
}

Shortfall shortfall(double goal_rps, double achieved_rps) {
  if (goal_rps <= 0) throw std::invalid_argument("shortfall: goal must be > 0");
  Shortfall s;
  s.percent = achieved_rps / goal_rps * 100.0;
  s.long_tail = s.percent < 90.0;
  return s;
}

}  // namespace faasbench::injector

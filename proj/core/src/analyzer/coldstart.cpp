#include "faasbench/analyzer/coldstart.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace faasbench::analyzer {

const char* to_string(DetectionMethod m) {
  switch (m) {
    case DetectionMethod::InstanceId: return "instance-id";
    case DetectionMethod::ColdFlag: return "cold-flag";
    case DetectionMethod::LatencyOutlier: return "latency-outlier";
  }
  throw std::invalid_argument("bad detection method value");
}

DetectionMethod detection_method_from_string(const std::string& s) {
  if (s == "instance-id") return DetectionMethod::InstanceId;
  if (s == "cold-flag") return DetectionMethod::ColdFlag;
  if (s == "latency-outlier") return DetectionMethod::LatencyOutlier;
  throw std::invalid_argument("unknown detection method: " + s);
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double pos = q * (static_cast<double>(sorted.size()) - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

}  // namespace

std::vector<LabeledSample> detect_cold_starts(std::vector<Sample> samples,
                                              DetectionMethod method, double outlier_k) {
  // Keep only completed requests, in service order.
  std::vector<Sample> ok;
  ok.reserve(samples.size());
  for (auto& s : samples) {
    if (s.ok()) ok.push_back(std::move(s));
  }
  std::sort(ok.begin(), ok.end(), [](const Sample& a, const Sample& b) {
    if (a.actual_start_ns != b.actual_start_ns) return a.actual_start_ns < b.actual_start_ns;
    return a.seq < b.seq;
  });

  std::vector<LabeledSample> out;
  out.reserve(ok.size());
  switch (method) {
    case DetectionMethod::InstanceId: {
      std::set<std::string> seen;
      for (auto& s : ok) {
        if (s.instance_id.empty()) {
          throw std::invalid_argument(
              "instance-id detection: sample without instance id (seq " +
              std::to_string(s.seq) + ")");
        }
        const bool cold = seen.insert(s.instance_id).second;
        out.push_back({std::move(s), cold});
      }
      break;
    }
    case DetectionMethod::ColdFlag: {
      for (auto& s : ok) {
        if (!s.cold.has_value()) {
          throw std::invalid_argument("cold-flag detection: sample without provider flag");
        }
        const bool cold = *s.cold;
        out.push_back({std::move(s), cold});
      }
      break;
    }
    case DetectionMethod::LatencyOutlier: {
      if (ok.empty()) return out;
      std::vector<double> lat;
      lat.reserve(ok.size());
      for (const auto& s : ok) lat.push_back(static_cast<double>(s.latency_ns));
      std::sort(lat.begin(), lat.end());
      const double median = quantile_sorted(lat, 0.5);
      const double iqr = quantile_sorted(lat, 0.75) - quantile_sorted(lat, 0.25);
      const double threshold = median + outlier_k * iqr;
      for (auto& s : ok) {
        const bool cold = static_cast<double>(s.latency_ns) > threshold;
        out.push_back({std::move(s), cold});
      }
      break;
    }
  }
  return out;
}

ColdStartReport cold_overhead(const std::vector<LabeledSample>& labeled) {
  std::vector<double> cold_ms;
  std::vector<double> warm_ms;
  std::set<std::string> seen_instances;
  bool have_ids = true;
  for (const auto& ls : labeled) {
    if (ls.sample.instance_id.empty()) have_ids = false;
  }
  for (const auto& ls : labeled) {
    const double ms = static_cast<double>(ls.sample.latency_ns) / 1e6;
    if (ls.cold) {
      cold_ms.push_back(ms);
      if (have_ids) seen_instances.insert(ls.sample.instance_id);
      continue;
    }
    // First contact with an instance stays out of the warm mean even when
    // the labeling called it warm.
    if (have_ids && seen_instances.insert(ls.sample.instance_id).second) continue;
    warm_ms.push_back(ms);
  }
  if (cold_ms.empty() || warm_ms.empty()) {
    throw std::invalid_argument("cold_overhead needs at least one cold and one warm sample");
  }

  ColdStartReport report;
  report.cold_count = static_cast<std::int64_t>(cold_ms.size());
  report.warm_count = static_cast<std::int64_t>(warm_ms.size());
  double warm_sum = 0;
  for (double v : warm_ms) warm_sum += v;
  report.warm_mean_ms = warm_sum / static_cast<double>(warm_ms.size());

  std::vector<double> overhead;
  overhead.reserve(cold_ms.size());
  for (double v : cold_ms) overhead.push_back(std::max(0.0, v - report.warm_mean_ms));
  std::sort(overhead.begin(), overhead.end());
  double sum = 0;
  for (double v : overhead) sum += v;
  report.overhead_ms.mean = sum / static_cast<double>(overhead.size());
  report.overhead_ms.min = overhead.front();
  report.overhead_ms.max = overhead.back();
  report.overhead_ms.q1 = quantile_sorted(overhead, 0.25);
  report.overhead_ms.median = quantile_sorted(overhead, 0.5);
  report.overhead_ms.q3 = quantile_sorted(overhead, 0.75);
  return report;
}

}  // namespace faasbench::analyzer

#include "faasbench/sim/virtual_load.hpp"

#include <algorithm>

namespace faasbench::sim {

namespace {
constexpr std::int64_t kMsToNs = 1'000'000;
}

std::vector<Sample> run_probe_virtual(Engine& engine,
                                      const std::vector<std::string>& deployment_ids,
                                      std::int64_t interval_ms, int samples_per_target,
                                      const injector::SampleSink& sink) {
  if (interval_ms <= 0) throw std::invalid_argument("probe interval must be > 0");
  if (samples_per_target < 1) throw std::invalid_argument("probe samples must be >= 1");
  std::vector<Sample> out;
  if (deployment_ids.empty()) return out;

  const std::int64_t t0 = engine.now();
  std::int64_t seq = 0;
  for (int round = 0; round < samples_per_target; ++round) {
    const std::int64_t t = t0 + round * interval_ms * kMsToNs;
    for (const auto& id : deployment_ids) engine.submit(t, id, seq++);
  }
  engine.advance_all();
  out = engine.take_samples();
  std::sort(out.begin(), out.end(), [](const Sample& a, const Sample& b) {
    return a.seq < b.seq;
  });
  if (sink) {
    for (const auto& s : out) sink(s);
  }
  return out;
}

std::vector<injector::RateResult> run_stress_virtual(Engine& engine,
                                                     const std::string& deployment_id,
                                                     const injector::StressPlan& plan,
                                                     const injector::SampleSink& sink) {
  injector::StressPlan checked = plan;
  if (checked.target.empty()) checked.target = deployment_id;
  checked.validate();

  struct Window {
    std::int64_t start_ns;
    std::int64_t end_ns;
  };
  std::vector<Window> windows;
  windows.reserve(checked.rates.size());

  std::int64_t t = engine.now();
  std::int64_t seq = 0;
  for (double rate : checked.rates) {
    const std::int64_t duration_ns = checked.duration_per_rate_ms * kMsToNs;
    const auto total = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(rate * static_cast<double>(checked.duration_per_rate_ms) /
                                         1000.0 +
                                     0.5));
    windows.push_back({t, t + duration_ns});
    for (std::int64_t i = 0; i < total; ++i) {
      const std::int64_t at =
          t + static_cast<std::int64_t>(static_cast<double>(i) * 1e9 / rate);
      engine.submit(at, deployment_id, seq++);
    }
    t += duration_ns;
    engine.advance_to(t + checked.drain_gap_ms * kMsToNs);
    t += checked.drain_gap_ms * kMsToNs;
  }
  engine.advance_all();

  std::vector<Sample> samples = engine.take_samples();
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.seq < b.seq; });

  std::vector<injector::RateResult> results(windows.size());
  for (std::size_t k = 0; k < windows.size(); ++k) {
    results[k].goal_rps = checked.rates[k];
  }
  for (const auto& s : samples) {
    // Attribute each sample to the step whose window its intended send is in.
    auto it = std::upper_bound(windows.begin(), windows.end(), s.intended_start_ns,
                               [](std::int64_t v, const Window& w) { return v < w.start_ns; });
    if (it == windows.begin()) continue;
    const std::size_t k = static_cast<std::size_t>(std::distance(windows.begin(), it)) - 1;
    injector::RateResult& r = results[k];
    ++r.recorded;
    r.histogram.record(s.latency_ns);
    ++r.status_counts[s.status];
    if (s.status == SampleStatus::Ok) r.achieved_rps += 1.0;  // count; divided below
    if (sink) sink(s);
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    results[k].scheduled = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(checked.rates[k] *
                                         static_cast<double>(checked.duration_per_rate_ms) /
                                         1000.0 +
                                     0.5));
    results[k].achieved_rps /= static_cast<double>(checked.duration_per_rate_ms) / 1000.0;
  }
  return results;
}

}  // namespace faasbench::sim

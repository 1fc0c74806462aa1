#include "faasbench/injector/probe.hpp"

#include <chrono>
#include <thread>

#include "faasbench/injector/http_client.hpp"

namespace faasbench::injector {

namespace {

std::int64_t steady_now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::vector<Sample> run_probe(const ProbePlan& plan, const SampleSink& sink) {
  plan.validate();
  std::vector<Sample> samples;
  if (plan.targets.empty()) return samples;

  std::vector<HttpConnection> connections;
  connections.reserve(plan.targets.size());
  for (const auto& target : plan.targets) {
    connections.emplace_back(target, plan.timeout_ms);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t t0_ns = steady_now_ns();
  std::int64_t seq = 0;
  for (int round = 0; round < plan.samples_per_target; ++round) {
    const auto intended = t0 + std::chrono::milliseconds(plan.interval_ms) * round;
    std::this_thread::sleep_until(intended);
    const std::int64_t intended_ns =
        t0_ns + round * plan.interval_ms * 1'000'000;
    for (std::size_t i = 0; i < connections.size(); ++i) {
      const std::int64_t actual_ns = steady_now_ns();
      const FetchResult r = connections[i].get();
      const std::int64_t done_ns = steady_now_ns();
      Sample s;
      s.deployment_id = plan.targets[i];
      s.seq = seq++;
      s.intended_start_ns = intended_ns;
      s.actual_start_ns = actual_ns;
      s.latency_ns = done_ns - intended_ns;
      s.service_latency_ns = done_ns - actual_ns;
      s.status = r.status;
      s.http_code = r.http_code;
      s.instance_id = r.instance_id;
      s.cold = r.cold;
      s.response_bytes = r.response_bytes;
      if (sink) sink(s);
      samples.push_back(std::move(s));
    }
  }
  return samples;
}

}  // namespace faasbench::injector

#include "faasbench/injector/stress.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>
#include <thread>

#include "faasbench/injector/http_client.hpp"

namespace faasbench::injector {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t to_ns(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t.time_since_epoch()).count();
}

struct Job {
  std::int64_t seq;
  std::int64_t intended_ns;
};

class JobQueue {
public:
  void push(Job job) {
    {
      std::lock_guard lock(mutex_);
      jobs_.push_back(job);
    }
    cv_.notify_one();
  }

  void close() {
    {
      std::lock_guard lock(mutex_);
      closed_ = true;
    }
    cv_.notify_all();
  }

  std::optional<Job> pop() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return closed_ || !jobs_.empty(); });
    if (jobs_.empty()) return std::nullopt;
    Job job = jobs_.front();
    jobs_.pop_front();
    return job;
  }

private:
  std::mutex mutex_;
  std::condition_variable cv_;
  std::deque<Job> jobs_;
  bool closed_{false};
};

struct WorkerState {
  LatencyHistogram histogram;
  std::map<SampleStatus, std::int64_t> status_counts;
  std::int64_t ok{0};
};

RateResult run_rate(const StressPlan& plan, double rate, const SampleSink& sink) {
  const std::int64_t total = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(rate * static_cast<double>(plan.duration_per_rate_ms) / 1000.0 + 0.5));
  const int workers_n = plan.connections_for(rate);

  JobQueue queue;
  std::atomic<std::int64_t> recorded{0};
  std::atomic<bool> cancel{false};
  std::mutex done_mutex;
  std::condition_variable done_cv;
  std::mutex sink_mutex;

  std::vector<WorkerState> states(static_cast<std::size_t>(workers_n));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(workers_n));
  for (int w = 0; w < workers_n; ++w) {
    workers.emplace_back([&, w] {
      WorkerState& st = states[static_cast<std::size_t>(w)];
      HttpConnection conn(plan.target, plan.timeout_ms);
      while (auto job = queue.pop()) {
        Sample s;
        s.deployment_id = plan.target;
        s.seq = job->seq;
        s.intended_start_ns = job->intended_ns;
        if (cancel.load(std::memory_order_relaxed)) {
          // Drain cutoff passed: account for the send without issuing it.
          const std::int64_t now = to_ns(Clock::now());
          s.actual_start_ns = now;
          s.latency_ns = now - job->intended_ns;
          s.service_latency_ns = 0;
          s.status = SampleStatus::Timeout;
        } else {
          const std::int64_t actual = to_ns(Clock::now());
          const FetchResult r = conn.get();
          const std::int64_t done = to_ns(Clock::now());
          s.actual_start_ns = std::max(actual, job->intended_ns);
          s.latency_ns = done - job->intended_ns;
          s.service_latency_ns = done - actual;
          s.status = r.status;
          s.http_code = r.http_code;
          s.instance_id = r.instance_id;
          s.cold = r.cold;
          s.response_bytes = r.response_bytes;
        }
        st.histogram.record(s.latency_ns);
        ++st.status_counts[s.status];
        if (s.status == SampleStatus::Ok) ++st.ok;
        if (sink) {
          std::lock_guard lock(sink_mutex);
          sink(s);
        }
        if (recorded.fetch_add(1, std::memory_order_acq_rel) + 1 == total) {
          std::lock_guard lock(done_mutex);
          done_cv.notify_all();
        }
      }
    });
  }

  // Open-loop schedule: the sender never waits for responses.
  const auto t0 = Clock::now();
  for (std::int64_t i = 0; i < total; ++i) {
    const auto intended =
        t0 + std::chrono::nanoseconds(static_cast<std::int64_t>(static_cast<double>(i) * 1e9 / rate));
    std::this_thread::sleep_until(intended);
    queue.push({i, to_ns(intended)});
  }
  queue.close();

  // Drain: wait for in-flight work, bounded by the configured gap.
  {
    std::unique_lock lock(done_mutex);
    done_cv.wait_for(lock, std::chrono::milliseconds(plan.drain_gap_ms),
                     [&] { return recorded.load() >= total; });
  }
  cancel.store(true);
  for (auto& t : workers) t.join();

  RateResult result;
  result.goal_rps = rate;
  result.scheduled = total;
  std::int64_t ok = 0;
  for (const auto& st : states) {
    result.histogram.merge(st.histogram);
    for (const auto& [status, count] : st.status_counts) result.status_counts[status] += count;
    ok += st.ok;
  }
  result.recorded = recorded.load();
  result.achieved_rps =
      static_cast<double>(ok) / (static_cast<double>(plan.duration_per_rate_ms) / 1000.0);
  return result;
}

}  // namespace

std::vector<RateResult> run_stress(const StressPlan& plan, const SampleSink& sink) {
  plan.validate();
  std::vector<RateResult> results;
  results.reserve(plan.rates.size());
  for (double rate : plan.rates) {
    results.push_back(run_rate(plan, rate, sink));
  }
  return results;
}

}  // namespace faasbench::injector

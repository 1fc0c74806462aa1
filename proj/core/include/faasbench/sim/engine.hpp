#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <vector>

#include "faasbench/model/deployment.hpp"
#include "faasbench/model/profile.hpp"
#include "faasbench/util/rng.hpp"
#include "faasbench/workloads/workloads.hpp"

namespace faasbench::sim {

enum class InstanceStatus { ColdStarting, Warm, Busy, Recycled };

const char* to_string(InstanceStatus s);

struct InstanceInfo {
  std::string id;
  std::string deployment_id;
  InstanceStatus status{InstanceStatus::ColdStarting};
  std::int64_t spawned_at_ns{0};
  std::int64_t ready_at_ns{0};
  std::int64_t last_used_ns{0};
  std::int64_t served{0};
};

struct EngineCounters {
  std::int64_t arrived{0};
  std::int64_t completed{0};
  std::int64_t rejected{0};
  std::int64_t timed_out{0};
  std::int64_t queued{0};     // waiting right now
  std::int64_t executing{0};  // assigned to a busy instance right now
  std::int64_t cold_starting{0};
  std::int64_t warm_idle{0};
  std::int64_t busy_instances{0};
  std::int64_t recycled_instances{0};
  std::int64_t spawned_instances{0};
  std::int64_t peak_admitted{0};  // max of executing+queued over the run

  bool conserved() const {
    return arrived == completed + rejected + timed_out + queued + executing;
  }
};

// Discrete-event model of one provider: instance pool with cold starts and
// idle recycling, FIFO queueing, concurrency caps and rate-limited scale-out.
// Single-threaded; owners that serve it over HTTP wrap it in a runner that
// maps virtual delays onto the wall clock.
class Engine {
public:
  Engine(ProviderProfile profile, std::uint64_t seed);
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept = delete;

  const ProviderProfile& profile() const { return profile_; }

  // Lifecycle. create returns the deployment id (Ready immediately).
  std::string create_deployment(const std::string& region,
                                const workloads::WorkloadSpec& workload,
                                const std::string& runtime_label, int memory_mb,
                                std::int64_t timeout_ms = 30'000);
  void remove_deployment(const std::string& deployment_id);
  const Deployment* find_deployment(const std::string& deployment_id) const;
  std::vector<Deployment> deployments() const;
  int deployment_census() const;  // deployments not yet Removed

  // Virtual-time request path. `now_ns` must be nondecreasing across calls.
  // The request's Sample materializes once its completion event fires.
  void submit(std::int64_t now_ns, const std::string& deployment_id, std::int64_t seq);

  // Processes every event due at or before `now_ns`.
  void advance_to(std::int64_t now_ns);
  // Runs the event queue dry (recycling included).
  void advance_all();
  std::int64_t now() const { return now_ns_; }
  // Virtual time of the next pending event, or -1 when idle.
  std::int64_t next_event_ns() const;

  // Completed/rejected samples accumulated since the last call.
  std::vector<Sample> take_samples();

  // Introspection.
  const EngineCounters& counters() const { return counters_; }
  int active_instances(const std::string& deployment_id) const;
  std::vector<InstanceInfo> instances(const std::string& deployment_id) const;
  // (virtual ns, active instance count) appended on every pool change.
  const std::vector<std::pair<std::int64_t, int>>& instance_trace(
      const std::string& deployment_id) const;
  double service_ms(const std::string& deployment_id) const;

  // Admin hook: recycle every idle instance immediately (forces the next
  // invocation per deployment to cold-start).
  void force_recycle(const std::string& deployment_id);

private:
  struct Instance;
  struct DeploymentState;

  struct Event {
    enum class Kind { InstanceReady, Completion, RecycleDue };
    Kind kind{Kind::InstanceReady};
    std::string deployment_id;
    std::string instance_id;
    std::int64_t seq{0};                 // Completion: request sequence
    std::int64_t submitted_ns{0};        // Completion: arrival time
    std::int64_t actual_start_ns{0};     // Completion: dispatch time
    std::int64_t last_used_snapshot{0};  // RecycleDue: staleness guard
  };

  struct QueuedEvent {
    std::int64_t at_ns{0};
    std::int64_t order{0};
    Event event;
    friend bool operator>(const QueuedEvent& a, const QueuedEvent& b) {
      return a.at_ns != b.at_ns ? a.at_ns > b.at_ns : a.order > b.order;
    }
  };

  DeploymentState& state_for(const std::string& deployment_id);
  const DeploymentState& state_for(const std::string& deployment_id) const;
  void process_event(std::int64_t at_ns, const Event& ev);
  void dispatch_queue(DeploymentState& d, std::int64_t now_ns);
  void maybe_spawn(DeploymentState& d, std::int64_t now_ns);
  void recycle_instance(DeploymentState& d, Instance& inst, std::int64_t now_ns);
  void reject(DeploymentState& d, std::int64_t now_ns, std::int64_t seq);
  void push_event(std::int64_t at_ns, Event ev);
  double cold_draw_ms(const std::string& runtime_label);
  std::int64_t recycle_draw_ms();
  void note_pool_change(DeploymentState& d, std::int64_t now_ns);
  void note_admitted();

  ProviderProfile profile_;
  SplitMix64 rng_;
  double spare_gauss_{0};
  bool has_spare_gauss_{false};

  std::map<std::string, std::unique_ptr<DeploymentState>> deployments_;
  std::int64_t now_ns_{0};
  std::int64_t event_order_{0};
  std::int64_t instance_seq_{0};
  std::int64_t deployment_seq_{0};

  std::priority_queue<QueuedEvent, std::vector<QueuedEvent>, std::greater<QueuedEvent>>
      events_;

  std::vector<Sample> samples_;
  EngineCounters counters_;
};

}  // namespace faasbench::sim

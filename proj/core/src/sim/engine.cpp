#include "faasbench/sim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "faasbench/sim/service_law.hpp"

namespace faasbench::sim {

namespace {

constexpr std::int64_t kMsToNs = 1'000'000;

std::int64_t nominal_response_bytes(workloads::WorkloadId id) {
  switch (id) {
    case workloads::WorkloadId::NetLatency: return 79;
    case workloads::WorkloadId::Fact: return 120;
    case workloads::WorkloadId::MatrixMult: return 150;
    case workloads::WorkloadId::DiskIO: return 160;
    case workloads::WorkloadId::Custom: return 100;
  }
  return 100;
}

}  // namespace

const char* to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::ColdStarting: return "cold_starting";
    case InstanceStatus::Warm: return "warm";
    case InstanceStatus::Busy: return "busy";
    case InstanceStatus::Recycled: return "recycled";
  }
  throw std::invalid_argument("bad instance status value");
}

struct Engine::Instance {
  std::string id;
  InstanceStatus status{InstanceStatus::ColdStarting};
  std::int64_t spawned_at_ns{0};
  std::int64_t ready_at_ns{0};
  std::int64_t last_used_ns{0};
  std::int64_t served{0};
  std::int64_t recycle_after_ms{0};
};

struct Engine::DeploymentState {
  Deployment meta;
  workloads::WorkloadSpec workload;
  double service_ms{0};
  std::int64_t network_ns{0};

  struct PendingRequest {
    std::int64_t seq;
    std::int64_t submitted_ns;
  };
  std::deque<PendingRequest> queue;
  std::map<std::string, std::unique_ptr<Instance>> instances;
  std::deque<Instance*> idle;  // FIFO by the time they became idle
  std::int64_t next_spawn_ok_ns{0};
  int alive{0};       // cold-starting + warm + busy
  int cold_count{0};  // cold-starting only
  std::vector<std::pair<std::int64_t, int>> trace;
};

Engine::Engine(ProviderProfile profile, std::uint64_t seed)
    : profile_(std::move(profile)), rng_(derive_seed(seed, profile_.name.c_str())) {
  profile_.validate();
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;

std::string Engine::create_deployment(const std::string& region,
                                      const workloads::WorkloadSpec& workload,
                                      const std::string& runtime_label, int memory_mb,
                                      std::int64_t timeout_ms) {
  workload.validate();
  if (!profile_.has_region(region)) {
    throw std::invalid_argument(profile_.name + ": unknown region " + region);
  }
  if (!validate_memory(profile_, memory_mb)) {
    throw std::invalid_argument(profile_.name + ": memory " + std::to_string(memory_mb) +
                                " MB is not deployable");
  }

  auto d = std::make_unique<DeploymentState>();
  d->meta.id = profile_.name + "-d" + std::to_string(++deployment_seq_);
  d->meta.provider = profile_.name;
  d->meta.region = region;
  d->meta.workload = workloads::to_string(workload.id);
  d->meta.runtime_label = runtime_label;
  d->meta.memory_mb = memory_mb;
  d->meta.timeout_ms = timeout_ms;
  d->meta.endpoint = "/invoke/" + d->meta.id;
  d->workload = workload;

  const double base_work = workload.work_ms() * profile_.work_factor_for(runtime_label);
  d->service_ms = service_time_ms(law_for(profile_, base_work), profile_.memory_tiers,
                                  memory_mb);
  d->network_ns = static_cast<std::int64_t>(profile_.network_base_ms(region)) * kMsToNs;
  d->meta.transition(DeployState::Ready);

  const std::string id = d->meta.id;
  deployments_.emplace(id, std::move(d));
  return id;
}

void Engine::remove_deployment(const std::string& deployment_id) {
  DeploymentState& d = state_for(deployment_id);
  if (d.meta.state == DeployState::Removed) return;  // idempotent
  d.meta.transition(DeployState::Removed);
  // Drop waiting requests; running work finishes naturally.
  while (!d.queue.empty()) {
    const auto req = d.queue.front();
    d.queue.pop_front();
    --counters_.queued;
    reject(d, now_ns_, req.seq);
  }
  for (auto& [id, inst] : d.instances) {
    if (inst->status == InstanceStatus::Warm || inst->status == InstanceStatus::ColdStarting) {
      recycle_instance(d, *inst, now_ns_);
    }
  }
}

const Deployment* Engine::find_deployment(const std::string& deployment_id) const {
  auto it = deployments_.find(deployment_id);
  return it == deployments_.end() ? nullptr : &it->second->meta;
}

std::vector<Deployment> Engine::deployments() const {
  std::vector<Deployment> out;
  out.reserve(deployments_.size());
  for (const auto& [id, d] : deployments_) out.push_back(d->meta);
  return out;
}

int Engine::deployment_census() const {
  int n = 0;
  for (const auto& [id, d] : deployments_) {
    if (d->meta.state != DeployState::Removed) ++n;
  }
  return n;
}

Engine::DeploymentState& Engine::state_for(const std::string& deployment_id) {
  auto it = deployments_.find(deployment_id);
  if (it == deployments_.end()) {
    throw std::invalid_argument("unknown deployment: " + deployment_id);
  }
  return *it->second;
}

const Engine::DeploymentState& Engine::state_for(const std::string& deployment_id) const {
  auto it = deployments_.find(deployment_id);
  if (it == deployments_.end()) {
    throw std::invalid_argument("unknown deployment: " + deployment_id);
  }
  return *it->second;
}

void Engine::note_pool_change(DeploymentState& d, std::int64_t now_ns) {
  if (d.trace.empty() || d.trace.back().second != d.alive) {
    d.trace.emplace_back(now_ns, d.alive);
  }
}

void Engine::note_admitted() {
  counters_.peak_admitted =
      std::max(counters_.peak_admitted, counters_.queued + counters_.executing);
}

double Engine::cold_draw_ms(const std::string& runtime_label) {
  const ColdStartDist& dist = profile_.cold_start_for(runtime_label);
  if (dist.kind == ColdStartDist::Kind::Uniform) {
    return static_cast<double>(dist.lo_ms) +
           rng_.next_unit() * static_cast<double>(dist.hi_ms - dist.lo_ms);
  }
  // Box-Muller on the engine's own stream keeps draws platform-independent.
  double z;
  if (has_spare_gauss_) {
    z = spare_gauss_;
    has_spare_gauss_ = false;
  } else {
    double u1 = rng_.next_unit();
    double u2 = rng_.next_unit();
    while (u1 <= 1e-12) u1 = rng_.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    z = r * std::cos(2.0 * M_PI * u2);
    spare_gauss_ = r * std::sin(2.0 * M_PI * u2);
    has_spare_gauss_ = true;
  }
  const double mean = static_cast<double>(dist.mean_ms);
  const double sigma = mean * static_cast<double>(dist.spread_permille) / 1000.0;
  return std::max(0.0, mean + sigma * z);
}

std::int64_t Engine::recycle_draw_ms() {
  const auto& range = profile_.idle_recycle;
  if (range.max_ms <= range.min_ms) return range.min_ms;
  const double u = rng_.next_unit();
  return range.min_ms +
         static_cast<std::int64_t>(u * static_cast<double>(range.max_ms - range.min_ms));
}

void Engine::push_event(std::int64_t at_ns, Event ev) {
  events_.push(QueuedEvent{at_ns, ++event_order_, std::move(ev)});
}

std::int64_t Engine::next_event_ns() const {
  return events_.empty() ? -1 : events_.top().at_ns;
}

void Engine::submit(std::int64_t now_ns, const std::string& deployment_id, std::int64_t seq) {
  if (now_ns < now_ns_) {
    throw std::invalid_argument("submit: time must be nondecreasing");
  }
  advance_to(now_ns);
  DeploymentState& d = state_for(deployment_id);
  if (d.meta.state != DeployState::Ready) {
    throw std::logic_error("submit: deployment " + deployment_id + " is " +
                           to_string(d.meta.state));
  }
  ++counters_.arrived;

  // Providers that meter concurrently active executions count the queue too.
  if (profile_.concurrency_counts_queued) {
    const std::int64_t active = counters_.executing + counters_.queued;
    if (active >= profile_.effective_cap()) {
      reject(d, now_ns, seq);
      return;
    }
  } else if (d.queue.size() >= static_cast<std::size_t>(profile_.scale_out.queue_capacity) &&
             d.idle.empty()) {
    reject(d, now_ns, seq);
    return;
  }

  d.queue.push_back({seq, now_ns});
  ++counters_.queued;
  note_admitted();
  dispatch_queue(d, now_ns);
  maybe_spawn(d, now_ns);
}

void Engine::reject(DeploymentState& d, std::int64_t now_ns, std::int64_t seq) {
  ++counters_.rejected;
  Sample s;
  s.deployment_id = d.meta.id;
  s.seq = seq;
  s.intended_start_ns = now_ns;
  s.actual_start_ns = now_ns;
  s.service_latency_ns = 0;
  s.latency_ns = d.network_ns;  // the refusal still crosses the network
  s.status = SampleStatus::Rejected;
  s.response_bytes = 0;
  samples_.push_back(std::move(s));
}

void Engine::dispatch_queue(DeploymentState& d, std::int64_t now_ns) {
  while (!d.queue.empty() && !d.idle.empty()) {
    Instance* inst = d.idle.front();
    d.idle.pop_front();
    --counters_.warm_idle;
    const auto req = d.queue.front();
    d.queue.pop_front();
    --counters_.queued;

    inst->status = InstanceStatus::Busy;
    ++counters_.busy_instances;
    ++counters_.executing;

    Event ev;
    ev.kind = Event::Kind::Completion;
    ev.deployment_id = d.meta.id;
    ev.instance_id = inst->id;
    ev.seq = req.seq;
    ev.submitted_ns = req.submitted_ns;
    ev.actual_start_ns = now_ns;
    push_event(now_ns + static_cast<std::int64_t>(d.service_ms * kMsToNs), std::move(ev));
  }
}

void Engine::maybe_spawn(DeploymentState& d, std::int64_t now_ns) {
  const auto interval_ns = static_cast<std::int64_t>(1e9 / profile_.scale_out.max_spawn_rate);
  while (static_cast<int>(d.queue.size()) > d.cold_count &&
         d.alive < profile_.effective_cap() && now_ns >= d.next_spawn_ok_ns) {
    auto inst = std::make_unique<Instance>();
    inst->id = "i-" + std::to_string(++instance_seq_);
    inst->status = InstanceStatus::ColdStarting;
    inst->spawned_at_ns = now_ns;
    const double cold_ms = cold_draw_ms(d.meta.runtime_label);
    inst->ready_at_ns = now_ns + profile_.scale_out.spawn_latency_ms * kMsToNs +
                        static_cast<std::int64_t>(cold_ms * kMsToNs);
    inst->recycle_after_ms = recycle_draw_ms();
    ++counters_.cold_starting;
    ++counters_.spawned_instances;
    ++d.alive;
    ++d.cold_count;
    note_pool_change(d, now_ns);

    Event ev;
    ev.kind = Event::Kind::InstanceReady;
    ev.deployment_id = d.meta.id;
    ev.instance_id = inst->id;
    push_event(inst->ready_at_ns, std::move(ev));
    d.instances.emplace(inst->id, std::move(inst));
    d.next_spawn_ok_ns = now_ns + interval_ns;
  }
}

void Engine::advance_to(std::int64_t now_ns) {
  while (!events_.empty() && events_.top().at_ns <= now_ns) {
    const QueuedEvent top = events_.top();
    events_.pop();
    now_ns_ = std::max(now_ns_, top.at_ns);
    process_event(top.at_ns, top.event);
  }
  now_ns_ = std::max(now_ns_, now_ns);
}

void Engine::advance_all() {
  while (!events_.empty()) {
    const QueuedEvent top = events_.top();
    events_.pop();
    now_ns_ = std::max(now_ns_, top.at_ns);
    process_event(top.at_ns, top.event);
  }
}

void Engine::process_event(std::int64_t at_ns, const Event& ev) {
  auto dep_it = deployments_.find(ev.deployment_id);
  if (dep_it == deployments_.end()) return;
  DeploymentState& d = *dep_it->second;
  auto inst_it = d.instances.find(ev.instance_id);
  if (inst_it == d.instances.end()) return;
  Instance& inst = *inst_it->second;

  switch (ev.kind) {
    case Event::Kind::InstanceReady: {
      if (inst.status != InstanceStatus::ColdStarting) return;
      inst.status = InstanceStatus::Warm;
      --counters_.cold_starting;
      --d.cold_count;
      ++counters_.warm_idle;
      inst.last_used_ns = at_ns;
      d.idle.push_back(&inst);
      dispatch_queue(d, at_ns);
      if (inst.status == InstanceStatus::Warm) {
        Event recycle;
        recycle.kind = Event::Kind::RecycleDue;
        recycle.deployment_id = d.meta.id;
        recycle.instance_id = inst.id;
        recycle.last_used_snapshot = inst.last_used_ns;
        push_event(at_ns + inst.recycle_after_ms * kMsToNs, std::move(recycle));
      }
      break;
    }
    case Event::Kind::Completion: {
      const std::int64_t completion_ns = at_ns;
      Sample s;
      s.deployment_id = d.meta.id;
      s.seq = ev.seq;
      s.intended_start_ns = ev.submitted_ns;
      s.actual_start_ns = ev.actual_start_ns;
      s.service_latency_ns = completion_ns - ev.actual_start_ns;
      s.latency_ns = completion_ns - ev.submitted_ns + d.network_ns;
      s.instance_id = inst.id;
      s.cold = inst.served == 0;
      s.response_bytes = nominal_response_bytes(d.workload.id);
      if (s.latency_ns > d.meta.timeout_ms * kMsToNs) {
        s.status = SampleStatus::Timeout;
        ++counters_.timed_out;
      } else {
        s.status = SampleStatus::Ok;
        ++counters_.completed;
      }
      samples_.push_back(std::move(s));

      ++inst.served;
      inst.status = InstanceStatus::Warm;
      inst.last_used_ns = completion_ns;
      --counters_.busy_instances;
      --counters_.executing;
      ++counters_.warm_idle;
      d.idle.push_back(&inst);

      dispatch_queue(d, completion_ns);
      maybe_spawn(d, completion_ns);
      if (inst.status == InstanceStatus::Warm) {
        Event recycle;
        recycle.kind = Event::Kind::RecycleDue;
        recycle.deployment_id = d.meta.id;
        recycle.instance_id = inst.id;
        recycle.last_used_snapshot = inst.last_used_ns;
        push_event(completion_ns + inst.recycle_after_ms * kMsToNs, std::move(recycle));
      }
      break;
    }
    case Event::Kind::RecycleDue: {
      if (inst.status != InstanceStatus::Warm) return;
      if (inst.last_used_ns != ev.last_used_snapshot) return;  // used since
      recycle_instance(d, inst, at_ns);
      break;
    }
  }
}

void Engine::recycle_instance(DeploymentState& d, Instance& inst, std::int64_t now_ns) {
  if (inst.status == InstanceStatus::Recycled) return;
  if (inst.status == InstanceStatus::Warm) {
    auto it = std::find(d.idle.begin(), d.idle.end(), &inst);
    if (it != d.idle.end()) d.idle.erase(it);
    --counters_.warm_idle;
  } else if (inst.status == InstanceStatus::ColdStarting) {
    --counters_.cold_starting;
    --d.cold_count;
  } else if (inst.status == InstanceStatus::Busy) {
    throw std::logic_error("cannot recycle a busy instance");
  }
  inst.status = InstanceStatus::Recycled;
  ++counters_.recycled_instances;
  --d.alive;
  note_pool_change(d, now_ns);
}

void Engine::force_recycle(const std::string& deployment_id) {
  DeploymentState& d = state_for(deployment_id);
  std::vector<Instance*> idle(d.idle.begin(), d.idle.end());
  for (Instance* inst : idle) recycle_instance(d, *inst, now_ns_);
}

std::vector<Sample> Engine::take_samples() {
  std::vector<Sample> out;
  out.swap(samples_);
  return out;
}

int Engine::active_instances(const std::string& deployment_id) const {
  return state_for(deployment_id).alive;
}

std::vector<InstanceInfo> Engine::instances(const std::string& deployment_id) const {
  const DeploymentState& d = state_for(deployment_id);
  std::vector<InstanceInfo> out;
  out.reserve(d.instances.size());
  for (const auto& [id, inst] : d.instances) {
    InstanceInfo info;
    info.id = inst->id;
    info.deployment_id = deployment_id;
    info.status = inst->status;
    info.spawned_at_ns = inst->spawned_at_ns;
    info.ready_at_ns = inst->ready_at_ns;
    info.last_used_ns = inst->last_used_ns;
    info.served = inst->served;
    out.push_back(std::move(info));
  }
  return out;
}

const std::vector<std::pair<std::int64_t, int>>& Engine::instance_trace(
    const std::string& deployment_id) const {
  return state_for(deployment_id).trace;
}

double Engine::service_ms(const std::string& deployment_id) const {
  return state_for(deployment_id).service_ms;
}

}  // namespace faasbench::sim

#include "faasbench/orchestrator/adapter.hpp"

#include <stdexcept>

namespace faasbench::orchestrator {

ClockMode clock_mode_from_string(const std::string& s) {
  if (s == "virtual") return ClockMode::Virtual;
  if (s == "wall") return ClockMode::Wall;
  throw std::invalid_argument("unknown clock mode: " + s + " (want virtual|wall)");
}

SimAdapter::SimAdapter(ProviderProfile profile, std::uint64_t seed, ClockMode mode)
    : provider_(profile.name), mode_(mode) {
  if (mode_ == ClockMode::Virtual) {
    virtual_engine_ = std::make_unique<sim::Engine>(std::move(profile), seed);
  } else {
    wall_runner_ =
        std::make_unique<sim::WallClockRunner>(sim::Engine(std::move(profile), seed));
    http_ = std::make_unique<sim::SimHttpServer>(*wall_runner_);
    http_->start();
  }
}

SimAdapter::~SimAdapter() {
  if (http_) http_->stop();
  if (wall_runner_) wall_runner_->stop();
}

sim::Engine& SimAdapter::engine() {
  if (!virtual_engine_) throw std::logic_error("engine(): adapter is in wall mode");
  return *virtual_engine_;
}

sim::WallClockRunner& SimAdapter::runner() {
  if (!wall_runner_) throw std::logic_error("runner(): adapter is in virtual mode");
  return *wall_runner_;
}

std::string SimAdapter::http_base_url() const {
  if (!http_) throw std::logic_error("http_base_url(): adapter is in virtual mode");
  return http_->base_url();
}

Deployment SimAdapter::deploy(const DeploymentRequest& request, const StepFn& on_step) {
  auto step = [&](const char* name) {
    if (on_step) on_step(name);
  };
  // The provider flows differ in the middle steps; the sequence below is the
  // common shape they all reduce to.
  step("create_resources");
  step("package");
  step("upload");
  step("configure_trigger");

  std::string id;
  auto create = [&](sim::Engine& engine) {
    id = engine.create_deployment(request.region, request.workload, request.runtime_label,
                                  request.memory_mb, request.timeout_ms);
  };
  if (mode_ == ClockMode::Virtual) {
    create(*virtual_engine_);
  } else {
    wall_runner_->with_engine(create);
  }
  step("verify");

  Deployment out;
  auto fetch = [&](sim::Engine& engine) {
    const Deployment* d = engine.find_deployment(id);
    if (d == nullptr) throw std::logic_error("deployment vanished after create");
    out = *d;
  };
  if (mode_ == ClockMode::Virtual) {
    fetch(*virtual_engine_);
  } else {
    wall_runner_->with_engine(fetch);
    out.endpoint = http_->base_url() + "/invoke/" + out.id;
  }
  return out;
}

std::string SimAdapter::invoke_url(const Deployment& deployment) {
  if (mode_ == ClockMode::Wall) return http_->base_url() + "/invoke/" + deployment.id;
  return deployment.id;  // virtual-mode callers address the engine directly
}

void SimAdapter::remove(Deployment& deployment) {
  auto drop = [&](sim::Engine& engine) {
    if (engine.find_deployment(deployment.id) == nullptr) return;  // already gone
    engine.remove_deployment(deployment.id);
  };
  if (mode_ == ClockMode::Virtual) {
    drop(*virtual_engine_);
  } else {
    wall_runner_->with_engine(drop);
  }
  if (deployment.state == DeployState::Ready) deployment.transition(DeployState::Removed);
}

std::vector<Deployment> SimAdapter::list() {
  std::vector<Deployment> out;
  auto fill = [&](sim::Engine& engine) {
    for (const auto& d : engine.deployments()) {
      if (d.state != DeployState::Removed) out.push_back(d);
    }
  };
  if (mode_ == ClockMode::Virtual) {
    fill(*virtual_engine_);
  } else {
    wall_runner_->with_engine(fill);
  }
  return out;
}

int SimAdapter::resource_census() {
  int n = 0;
  auto count = [&](sim::Engine& engine) { n = engine.deployment_census(); };
  if (mode_ == ClockMode::Virtual) {
    count(*virtual_engine_);
  } else {
    wall_runner_->with_engine(count);
  }
  return n;
}

std::string workload_path(const workloads::WorkloadSpec& spec) {
  using workloads::WorkloadId;
  std::string path;
  std::string query;
  auto param = [&](const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) return;
    query += query.empty() ? "?" : "&";
    query += std::string(key) + "=" + it->second;
  };
  switch (spec.id) {
    case WorkloadId::Fact:
      path = "/fact";
      param("n");
      break;
    case WorkloadId::MatrixMult:
      path = "/matrix";
      param("dim");
      param("seed");
      break;
    case WorkloadId::NetLatency:
      path = "/netlatency";
      break;
    case WorkloadId::DiskIO:
      path = "/diskio";
      param("size");
      param("seed");
      break;
    case WorkloadId::Custom: {
      std::string name = spec.custom_entry.value_or("");
      if (name.empty()) {
        auto it = spec.params.find("name");
        if (it != spec.params.end()) name = it->second;
      }
      path = "/custom/" + name;
      break;
    }
  }
  return path + query;
}

GenericHttpAdapter::GenericHttpAdapter(std::string base_url, std::string name)
    : base_url_(std::move(base_url)), name_(std::move(name)) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
  if (base_url_.empty()) throw std::invalid_argument("generic adapter: base url empty");
}

Deployment GenericHttpAdapter::deploy(const DeploymentRequest& request,
                                      const StepFn& on_step) {
  if (on_step) on_step("verify");  // nothing to create for a live endpoint
  Deployment d;
  d.id = name_ + "-d" + std::to_string(++seq_);
  d.provider = name_;
  d.region = request.region.empty() ? "local" : request.region;
  d.workload = workloads::to_string(request.workload.id);
  d.runtime_label = request.runtime_label;
  d.memory_mb = request.memory_mb;
  d.timeout_ms = request.timeout_ms;
  d.endpoint = base_url_ + workload_path(request.workload);
  d.transition(DeployState::Ready);
  active_.push_back(d);
  return d;
}

std::string GenericHttpAdapter::invoke_url(const Deployment& deployment) {
  return deployment.endpoint;
}

void GenericHttpAdapter::remove(Deployment& deployment) {
  for (auto it = active_.begin(); it != active_.end(); ++it) {
    if (it->id == deployment.id) {
      active_.erase(it);
      break;
    }
  }
  if (deployment.state == DeployState::Ready) deployment.transition(DeployState::Removed);
}

std::vector<Deployment> GenericHttpAdapter::list() { return active_; }

}  // namespace faasbench::orchestrator

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "faasbench/model/deployment.hpp"
#include "faasbench/model/profile.hpp"
#include "faasbench/sim/engine.hpp"
#include "faasbench/sim/http_frontend.hpp"
#include "faasbench/sim/wall_runner.hpp"
#include "faasbench/workloads/workloads.hpp"

namespace faasbench::orchestrator {

enum class ClockMode { Virtual, Wall };

ClockMode clock_mode_from_string(const std::string& s);

struct DeploymentRequest {
  std::string provider;
  std::string region;
  std::string runtime_label;
  int memory_mb{128};
  std::int64_t timeout_ms{30'000};
  workloads::WorkloadSpec workload;
};

// Lifecycle contract every provider backend implements. Deployment flows
// report their step sequence (create resources, package, upload, configure
// trigger, verify) through the step callback so progress can be surfaced.
class ProviderAdapter {
public:
  using StepFn = std::function<void(const std::string& step)>;

  virtual ~ProviderAdapter() = default;
  virtual std::string provider() const = 0;
  virtual Deployment deploy(const DeploymentRequest& request, const StepFn& on_step = {}) = 0;
  virtual std::string invoke_url(const Deployment& deployment) = 0;
  // Idempotent; restores the provider to its prior resource state.
  virtual void remove(Deployment& deployment) = 0;
  virtual std::vector<Deployment> list() = 0;
};

// Embedded simulator backend. In Wall mode the engine is served over local
// HTTP and invoke_url returns real endpoints; in Virtual mode callers drive
// the engine directly through engine().
class SimAdapter : public ProviderAdapter {
public:
  SimAdapter(ProviderProfile profile, std::uint64_t seed, ClockMode mode);
  ~SimAdapter() override;

  std::string provider() const override { return provider_; }
  Deployment deploy(const DeploymentRequest& request, const StepFn& on_step = {}) override;
  std::string invoke_url(const Deployment& deployment) override;
  void remove(Deployment& deployment) override;
  std::vector<Deployment> list() override;

  ClockMode mode() const { return mode_; }
  // Virtual mode only: direct engine access for virtual-clock load drivers.
  sim::Engine& engine();
  // Wall mode only.
  sim::WallClockRunner& runner();
  std::string http_base_url() const;
  // Deployments not yet removed (leak census).
  int resource_census();

private:
  std::string provider_;
  ClockMode mode_;
  std::unique_ptr<sim::Engine> virtual_engine_;
  std::unique_ptr<sim::WallClockRunner> wall_runner_;
  std::unique_ptr<sim::SimHttpServer> http_;
};

// Pre-existing HTTP endpoint: deploy/remove are no-ops, invoke_url appends
// the workload path to the configured base URL.
class GenericHttpAdapter : public ProviderAdapter {
public:
  explicit GenericHttpAdapter(std::string base_url, std::string name = "generic");

  std::string provider() const override { return name_; }
  Deployment deploy(const DeploymentRequest& request, const StepFn& on_step = {}) override;
  std::string invoke_url(const Deployment& deployment) override;
  void remove(Deployment& deployment) override;
  std::vector<Deployment> list() override;

private:
  std::string base_url_;
  std::string name_;
  std::vector<Deployment> active_;
  int seq_{0};
};

// URL path of a workload on the local function server / generic target.
std::string workload_path(const workloads::WorkloadSpec& spec);

}  // namespace faasbench::orchestrator

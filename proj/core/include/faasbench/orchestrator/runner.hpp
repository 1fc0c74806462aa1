#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "faasbench/orchestrator/adapter.hpp"
#include "faasbench/orchestrator/campaign.hpp"
#include "faasbench/store/store.hpp"

namespace faasbench::orchestrator {

struct ProgressEvent {
  std::string cell;
  std::string kind;  // deploying | step | ready | failed | samples | removed
  std::string detail;
};

using ProgressFn = std::function<void(const ProgressEvent&)>;
// Polled between units of work; returning true stops the run cleanly and
// marks the stored results partial.
using CancelFn = std::function<bool()>;

struct CleanupReport {
  int removed{0};
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Drives a campaign end to end: deploy the matrix, execute the mode's plan
// while streaming samples into the store, and tear everything down.
class CampaignRunner {
public:
  CampaignRunner(std::vector<ProviderProfile> profiles, std::filesystem::path store_root,
                 ClockMode mode);

  void set_progress(ProgressFn fn) { progress_ = std::move(fn); }
  void set_cancel(CancelFn fn) { cancel_ = std::move(fn); }

  // Deploys every cell; failures isolate to their cell. Wall-mode cells
  // deploy concurrently on a bounded pool, virtual mode stays sequential
  // (one timeline per provider).
  std::vector<Deployment> deploy(const Campaign& campaign);

  // Executes the campaign mode over the deployed cells. With resume=true an
  // existing run directory is continued (completed stress rates are skipped).
  // Returns the run id.
  std::string run(const Campaign& campaign, bool resume = false);

  // Removes every deployment this runner created. Idempotent.
  CleanupReport cleanup();

  ProviderAdapter& adapter_for(const Campaign& campaign, const std::string& provider);
  // Deployments not yet removed across sim adapters (leak census).
  int resource_census();
  const std::map<std::string, Deployment>& deployments() const { return deployments_; }

private:
  void emit(const std::string& cell, const std::string& kind, const std::string& detail = {});
  bool cancelled() const { return cancel_ && cancel_(); }

  void run_probe(const Campaign& campaign, store::RunStore& run,
                 const std::vector<Campaign::Cell>& cells);
  void run_stress_mode(const Campaign& campaign, store::RunStore& run,
                       const std::vector<Campaign::Cell>& cells, bool resume);
  void run_coldstart(const Campaign& campaign, store::RunStore& run,
                     const std::vector<Campaign::Cell>& cells);
  void store_instance_trace(store::RunStore& run, const Campaign& campaign,
                            const Campaign::Cell& cell, const Deployment& deployment);

  std::vector<ProviderProfile> profiles_;
  store::Store store_;
  ClockMode mode_;
  ProgressFn progress_;
  CancelFn cancel_;
  std::map<std::string, std::unique_ptr<ProviderAdapter>> adapters_;
  std::map<std::string, Deployment> deployments_;  // cell id -> deployment
};

}  // namespace faasbench::orchestrator

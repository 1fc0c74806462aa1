#include "faasbench/orchestrator/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "faasbench/injector/probe.hpp"
#include "faasbench/injector/stress.hpp"
#include "faasbench/sim/virtual_load.hpp"
#include "faasbench/util/strings.hpp"

namespace faasbench::orchestrator {

namespace {

constexpr std::int64_t kMsToNs = 1'000'000;

std::int64_t wall_now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::map<std::string, std::string> cell_tags(const Campaign& campaign,
                                             const Campaign::Cell& cell,
                                             const Deployment& deployment) {
  return {{"run", campaign.run_id},
          {"provider", cell.provider},
          {"region", cell.region},
          {"runtime", cell.runtime_label},
          {"memory_mb", std::to_string(cell.memory_mb)},
          {"workload", workloads::to_string(campaign.workload.id)},
          {"test", to_string(campaign.mode)},
          {"deployment", deployment.id}};
}

store::Point sample_point(std::map<std::string, std::string> tags, const Sample& s) {
  store::Point p;
  p.measurement = "sample";
  p.tags = std::move(tags);
  p.timestamp_ns = s.intended_start_ns;
  p.fields["seq"] = s.seq;
  p.fields["latency_ns"] = s.latency_ns;
  p.fields["service_ns"] = s.service_latency_ns;
  p.fields["status"] = std::string(to_string(s.status));
  if (s.status == SampleStatus::HttpError) p.fields["code"] = std::int64_t{s.http_code};
  if (!s.instance_id.empty()) p.fields["instance"] = s.instance_id;
  if (s.cold.has_value()) p.fields["cold"] = *s.cold;
  p.fields["response_bytes"] = s.response_bytes;
  return p;
}

store::Point rate_point(std::map<std::string, std::string> tags,
                        const injector::RateResult& r, std::int64_t ts) {
  store::Point p;
  p.measurement = "stress_rate";
  p.tags = std::move(tags);
  p.timestamp_ns = ts;
  p.fields["goal_rps"] = r.goal_rps;
  p.fields["achieved_rps"] = r.achieved_rps;
  p.fields["scheduled"] = r.scheduled;
  p.fields["recorded"] = r.recorded;
  auto count = [&](SampleStatus st) {
    auto it = r.status_counts.find(st);
    return it == r.status_counts.end() ? std::int64_t{0} : it->second;
  };
  p.fields["ok"] = count(SampleStatus::Ok);
  p.fields["rejected"] = count(SampleStatus::Rejected);
  p.fields["timeout"] = count(SampleStatus::Timeout);
  p.fields["http_error"] = count(SampleStatus::HttpError);
  if (!r.histogram.empty()) {
    p.fields["p50_ms"] = static_cast<double>(r.histogram.percentile(50)) / 1e6;
    p.fields["p90_ms"] = static_cast<double>(r.histogram.percentile(90)) / 1e6;
    p.fields["p99_ms"] = static_cast<double>(r.histogram.percentile(99)) / 1e6;
  }
  return p;
}

store::Point meta_point(const std::string& run_id, const Campaign& campaign,
                        const std::string& status, std::int64_t ts) {
  store::Point p;
  p.measurement = "run_meta";
  p.tags = {{"run", run_id}};
  p.timestamp_ns = ts;
  p.fields["mode"] = std::string(to_string(campaign.mode));
  p.fields["seed"] = static_cast<std::int64_t>(campaign.seed);
  p.fields["status"] = status;
  return p;
}

}  // namespace

CampaignRunner::CampaignRunner(std::vector<ProviderProfile> profiles,
                               std::filesystem::path store_root, ClockMode mode)
    : profiles_(std::move(profiles)), store_(std::move(store_root)), mode_(mode) {}

void CampaignRunner::emit(const std::string& cell, const std::string& kind,
                          const std::string& detail) {
  if (progress_) progress_({cell, kind, detail});
}

ProviderAdapter& CampaignRunner::adapter_for(const Campaign& campaign,
                                             const std::string& provider) {
  auto it = adapters_.find(provider);
  if (it != adapters_.end()) return *it->second;
  std::unique_ptr<ProviderAdapter> adapter;
  if (provider == "generic") {
    adapter = std::make_unique<GenericHttpAdapter>(campaign.generic_base_url);
  } else {
    for (const auto& p : profiles_) {
      if (p.name == provider) {
        adapter = std::make_unique<SimAdapter>(p, campaign.seed, mode_);
        break;
      }
    }
    if (!adapter) throw std::invalid_argument("no profile for provider " + provider);
  }
  auto [pos, inserted] = adapters_.emplace(provider, std::move(adapter));
  return *pos->second;
}

std::vector<Deployment> CampaignRunner::deploy(const Campaign& campaign) {
  campaign.validate(profiles_);
  const std::vector<Campaign::Cell> cells = campaign.cells(profiles_);
  // Adapters are created up front; a failure here aborts the whole deploy.
  for (const auto& cell : cells) adapter_for(campaign, cell.provider);

  std::mutex mutex;
  auto deploy_cell = [&](const Campaign::Cell& cell) {
    const std::string id = cell.id();
    emit(id, "deploying");
    DeploymentRequest request{cell.provider, cell.region,    cell.runtime_label,
                              cell.memory_mb, campaign.timeout_ms, campaign.workload};
    Deployment deployment;
    try {
      ProviderAdapter* adapter;
      {
        std::lock_guard lock(mutex);
        adapter = &adapter_for(campaign, cell.provider);
      }
      deployment = adapter->deploy(
          request, [&](const std::string& step) { emit(id, "step", step); });
      emit(id, "ready", deployment.id);
    } catch (const std::exception& e) {
      deployment.provider = cell.provider;
      deployment.region = cell.region;
      deployment.runtime_label = cell.runtime_label;
      deployment.memory_mb = cell.memory_mb;
      deployment.state = DeployState::Deploying;
      deployment.transition(DeployState::Failed);
      deployment.failure_cause = e.what();
      emit(id, "failed", e.what());
    }
    std::lock_guard lock(mutex);
    deployments_[id] = deployment;
  };

  if (mode_ == ClockMode::Wall) {
    // The deployment flows run in parallel, a bounded pool per the usual
    // provider rate limits.
    const std::size_t pool = std::min<std::size_t>(8, cells.size());
    std::vector<std::thread> threads;
    std::atomic<std::size_t> next{0};
    for (std::size_t t = 0; t < pool; ++t) {
      threads.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          deploy_cell(cells[i]);
        }
      });
    }
    for (auto& t : threads) t.join();
  } else {
    for (const auto& cell : cells) deploy_cell(cell);
  }

  std::vector<Deployment> out;
  for (const auto& cell : cells) out.push_back(deployments_.at(cell.id()));
  return out;
}

std::string CampaignRunner::run(const Campaign& campaign, bool resume) {
  campaign.validate(profiles_);
  const std::vector<Campaign::Cell> cells = campaign.cells(profiles_);
  for (const auto& cell : cells) {
    if (!deployments_.contains(cell.id())) {
      throw std::logic_error("run: cell not deployed: " + cell.id());
    }
  }

  store::RunStore run_store = resume && store_.has_run(campaign.run_id)
                                  ? store_.open_run(campaign.run_id)
                                  : store_.create_run(campaign.run_id);
  const std::int64_t t_meta = mode_ == ClockMode::Virtual ? 0 : wall_now_ns();
  run_store.append(meta_point(campaign.run_id, campaign, "running", t_meta));

  bool partial = false;
  try {
    switch (campaign.mode) {
      case CampaignMode::Probe:
        run_probe(campaign, run_store, cells);
        break;
      case CampaignMode::Stress:
        run_stress_mode(campaign, run_store, cells, resume);
        break;
      case CampaignMode::ColdStart:
        run_coldstart(campaign, run_store, cells);
        break;
    }
    partial = cancelled();
  } catch (...) {
    run_store.append(meta_point(campaign.run_id, campaign, "partial",
                                mode_ == ClockMode::Virtual ? 1 : wall_now_ns()));
    throw;
  }
  run_store.append(meta_point(campaign.run_id, campaign, partial ? "partial" : "complete",
                              mode_ == ClockMode::Virtual ? 1 : wall_now_ns()));
  return campaign.run_id;
}

void CampaignRunner::run_probe(const Campaign& campaign, store::RunStore& run,
                               const std::vector<Campaign::Cell>& cells) {
  if (mode_ == ClockMode::Virtual) {
    // Group cells per provider: deployments on one engine share a timeline.
    std::vector<std::string> provider_order;
    std::map<std::string, std::vector<Campaign::Cell>> by_provider;
    for (const auto& cell : cells) {
      if (!by_provider.contains(cell.provider)) provider_order.push_back(cell.provider);
      by_provider[cell.provider].push_back(cell);
    }
    for (const auto& provider : provider_order) {
      if (cancelled()) return;
      auto& adapter = dynamic_cast<SimAdapter&>(adapter_for(campaign, provider));
      std::vector<std::string> ids;
      std::map<std::string, const Campaign::Cell*> cell_by_deployment;
      for (const auto& cell : by_provider[provider]) {
        const Deployment& d = deployments_.at(cell.id());
        if (d.state != DeployState::Ready) continue;
        ids.push_back(d.id);
        cell_by_deployment[d.id] = &cell;
      }
      if (ids.empty()) continue;
      const auto samples = sim::run_probe_virtual(adapter.engine(), ids,
                                                  campaign.probe_interval_ms,
                                                  campaign.probe_samples);
      std::vector<store::Point> points;
      points.reserve(samples.size());
      for (const auto& s : samples) {
        const Campaign::Cell& cell = *cell_by_deployment.at(s.deployment_id);
        points.push_back(
            sample_point(cell_tags(campaign, cell, deployments_.at(cell.id())), s));
      }
      run.append(points);
      for (const auto& cell : by_provider[provider]) {
        emit(cell.id(), "samples", std::to_string(campaign.probe_samples));
      }
    }
    return;
  }

  // Wall clock: one probe run over every ready target.
  injector::ProbePlan plan;
  plan.interval_ms = campaign.probe_interval_ms;
  plan.samples_per_target = campaign.probe_samples;
  plan.timeout_ms = campaign.timeout_ms;
  std::map<std::string, const Campaign::Cell*> cell_by_url;
  for (const auto& cell : cells) {
    Deployment& d = deployments_.at(cell.id());
    if (d.state != DeployState::Ready) continue;
    const std::string url = adapter_for(campaign, cell.provider).invoke_url(d);
    plan.targets.push_back(url);
    cell_by_url[url] = &cell;
  }
  std::vector<store::Point> points;
  std::mutex points_mutex;
  const auto samples = injector::run_probe(plan, [&](const Sample& s) {
    const Campaign::Cell& cell = *cell_by_url.at(s.deployment_id);
    std::lock_guard lock(points_mutex);
    points.push_back(sample_point(cell_tags(campaign, cell, deployments_.at(cell.id())), s));
  });
  run.append(points);
  for (const auto& [url, cell] : cell_by_url) {
    emit(cell->id(), "samples", std::to_string(campaign.probe_samples));
  }
}

void CampaignRunner::run_stress_mode(const Campaign& campaign, store::RunStore& run,
                                     const std::vector<Campaign::Cell>& cells, bool resume) {
  for (const auto& cell : cells) {
    if (cancelled()) return;
    Deployment& d = deployments_.at(cell.id());
    if (d.state != DeployState::Ready) continue;
    auto tags = cell_tags(campaign, cell, d);

    // Resume: skip rates this cell already stored.
    std::vector<double> pending;
    if (resume) {
      store::QueryFilter filter;
      filter.measurement = "stress_rate";
      filter.tags = tags;
      std::vector<double> done;
      for (const auto& p : run.query(filter)) {
        auto it = p.fields.find("goal_rps");
        if (it != p.fields.end()) done.push_back(std::get<double>(it->second));
      }
      for (double r : campaign.stress.rates) {
        if (std::find(done.begin(), done.end(), r) == done.end()) pending.push_back(r);
      }
    } else {
      pending = campaign.stress.rates;
    }

    ProviderAdapter& adapter = adapter_for(campaign, cell.provider);
    auto* sim_adapter = dynamic_cast<SimAdapter*>(&adapter);
    for (double rate : pending) {
      if (cancelled()) return;
      injector::StressPlan step = campaign.stress;
      step.rates = {rate};
      auto rate_tags = tags;
      rate_tags["rate"] = util::format_double(rate);
      std::vector<store::Point> points;
      std::vector<injector::RateResult> results;
      std::int64_t ts = 0;
      if (mode_ == ClockMode::Virtual) {
        sim::Engine& engine = sim_adapter->engine();
        ts = engine.now();
        results = sim::run_stress_virtual(engine, d.id, step, [&](const Sample& s) {
          points.push_back(sample_point(rate_tags, s));
        });
      } else {
        step.target = adapter.invoke_url(d);
        ts = wall_now_ns();
        std::mutex points_mutex;
        results = injector::run_stress(step, [&](const Sample& s) {
          std::lock_guard lock(points_mutex);
          points.push_back(sample_point(rate_tags, s));
        });
      }
      points.push_back(rate_point(tags, results.front(), ts));
      run.append(points);
      emit(cell.id(), "samples",
           "rate " + util::format_double(rate) + " achieved " +
               util::format_double(results.front().achieved_rps));
    }
    if (sim_adapter) store_instance_trace(run, campaign, cell, d);
  }
}

void CampaignRunner::run_coldstart(const Campaign& campaign, store::RunStore& run,
                                   const std::vector<Campaign::Cell>& cells) {
  for (const auto& cell : cells) {
    if (cancelled()) return;
    Deployment& d = deployments_.at(cell.id());
    if (d.state != DeployState::Ready) continue;
    auto tags = cell_tags(campaign, cell, d);
    ProviderAdapter& adapter = adapter_for(campaign, cell.provider);
    auto* sim_adapter = dynamic_cast<SimAdapter*>(&adapter);
    std::vector<store::Point> points;

    if (sim_adapter != nullptr && mode_ == ClockMode::Virtual) {
      sim::Engine& engine = sim_adapter->engine();
      std::int64_t seq = 0;
      std::int64_t t = engine.now();
      for (int rep = 0; rep < campaign.coldstart_repetitions; ++rep) {
        for (int i = 0; i < 1 + campaign.coldstart_warm_probes; ++i) {
          engine.submit(t, d.id, seq++);
          // Spaced a second apart so every invocation lands on a settled pool.
          t += 1000 * kMsToNs;
          engine.advance_to(t);
        }
        engine.advance_to(t + d.timeout_ms * kMsToNs);
        engine.force_recycle(d.id);
        t = engine.now();
      }
      engine.advance_all();
      for (const auto& s : engine.take_samples()) points.push_back(sample_point(tags, s));
      store_instance_trace(run, campaign, cell, d);
    } else {
      const std::string url = adapter.invoke_url(d);
      for (int rep = 0; rep < campaign.coldstart_repetitions; ++rep) {
        if (cancelled()) break;
        for (int i = 0; i < 1 + campaign.coldstart_warm_probes; ++i) {
          injector::ProbePlan one;
          one.targets = {url};
          one.samples_per_target = 1;
          one.interval_ms = 1;
          one.timeout_ms = campaign.timeout_ms;
          for (const auto& s : injector::run_probe(one)) {
            points.push_back(sample_point(tags, s));
          }
        }
        if (sim_adapter != nullptr) {
          sim_adapter->runner().with_engine(
              [&](sim::Engine& engine) { engine.force_recycle(d.id); });
        }
      }
    }
    run.append(points);
    emit(cell.id(), "samples",
         std::to_string(campaign.coldstart_repetitions) + " repetitions");
  }
}

void CampaignRunner::store_instance_trace(store::RunStore& run, const Campaign& campaign,
                                          const Campaign::Cell& cell,
                                          const Deployment& deployment) {
  auto& adapter = dynamic_cast<SimAdapter&>(adapter_for(campaign, cell.provider));
  std::vector<std::pair<std::int64_t, int>> trace;
  if (mode_ == ClockMode::Virtual) {
    trace = adapter.engine().instance_trace(deployment.id);
  } else {
    adapter.runner().with_engine(
        [&](sim::Engine& engine) { trace = engine.instance_trace(deployment.id); });
  }
  std::vector<store::Point> points;
  points.reserve(trace.size());
  for (const auto& [t, n] : trace) {
    store::Point p;
    p.measurement = "instances";
    p.tags = {{"run", campaign.run_id},
              {"provider", cell.provider},
              {"deployment", deployment.id}};
    p.timestamp_ns = t;
    p.fields["count"] = static_cast<std::int64_t>(n);
    points.push_back(std::move(p));
  }
  if (!points.empty()) run.append(points);
}

CleanupReport CampaignRunner::cleanup() {
  CleanupReport report;
  for (auto& [cell_id, deployment] : deployments_) {
    if (deployment.state == DeployState::Removed ||
        deployment.state == DeployState::Failed) {
      continue;
    }
    auto it = adapters_.find(deployment.provider);
    if (it == adapters_.end()) continue;
    try {
      it->second->remove(deployment);
      ++report.removed;
      emit(cell_id, "removed");
    } catch (const std::exception& e) {
      report.failures.push_back(cell_id + ": " + e.what());
    }
  }
  return report;
}

int CampaignRunner::resource_census() {
  int n = 0;
  for (auto& [provider, adapter] : adapters_) {
    if (auto* sim_adapter = dynamic_cast<SimAdapter*>(adapter.get())) {
      n += sim_adapter->resource_census();
    }
  }
  return n;
}

}  // namespace faasbench::orchestrator

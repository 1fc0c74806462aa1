#include "faasbench/sim/http_frontend.hpp"

#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace faasbench::sim {

using nlohmann::json;

struct SimHttpServer::Impl {
  httplib::Server server;
  std::thread thread;
};

SimHttpServer::SimHttpServer(WallClockRunner& runner)
    : runner_(runner), impl_(std::make_unique<Impl>()) {}

SimHttpServer::~SimHttpServer() { stop(); }

std::string SimHttpServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

void SimHttpServer::start(const std::string& host, int port) {
  auto& server = impl_->server;
  // Admitted requests hold a handler thread for their full simulated
  // latency; the pool must cover capacity + queue for small profiles.
  server.new_task_queue = [] { return new httplib::ThreadPool(192); };

  auto handle_invoke = [this](const httplib::Request& req, httplib::Response& res) {
    const std::string deployment_id = req.matches[1];
    std::string region;
    bool known = false;
    bool ready = false;
    runner_.with_engine([&](Engine& engine) {
      if (const Deployment* d = engine.find_deployment(deployment_id)) {
        known = true;
        ready = d->state == DeployState::Ready;
        region = d->region;
      }
    });
    if (!known || !ready) {
      res.status = 404;
      res.set_content(json{{"error", "no such deployment: " + deployment_id}}.dump(),
                      "application/json");
      return;
    }
    Sample s = runner_.invoke(deployment_id);
    res.set_header("x-sim-region", region);
    if (!s.instance_id.empty()) res.set_header("x-sim-instance-id", s.instance_id);
    if (s.cold.has_value()) res.set_header("x-sim-cold", *s.cold ? "true" : "false");
    json body{{"deployment", deployment_id},
              {"status", to_string(s.status)},
              {"latency_ms", static_cast<double>(s.latency_ns) / 1e6},
              {"service_ms", static_cast<double>(s.service_latency_ns) / 1e6}};
    switch (s.status) {
      case SampleStatus::Ok:
        res.status = 200;
        break;
      case SampleStatus::Rejected:
        res.status = 503;
        break;
      case SampleStatus::Timeout:
        res.status = 504;
        break;
      case SampleStatus::HttpError:
        res.status = s.http_code > 0 ? s.http_code : 500;
        break;
    }
    res.set_content(body.dump(), "application/json");
  };
  impl_->server.Get(R"(/invoke/([\w\-]+))", handle_invoke);
  impl_->server.Post(R"(/invoke/([\w\-]+))", handle_invoke);

  server.Get("/admin/instances", [this](const httplib::Request&, httplib::Response& res) {
    json body = json::object();
    runner_.with_engine([&](Engine& engine) {
      for (const auto& d : engine.deployments()) {
        if (d.state == DeployState::Removed) continue;
        body[d.id] = engine.active_instances(d.id);
      }
    });
    res.set_content(body.dump(), "application/json");
  });

  server.Get("/admin/stats", [this](const httplib::Request&, httplib::Response& res) {
    json body;
    runner_.with_engine([&](Engine& engine) {
      const EngineCounters& c = engine.counters();
      body = json{{"arrived", c.arrived},
                  {"completed", c.completed},
                  {"rejected", c.rejected},
                  {"timed_out", c.timed_out},
                  {"queued", c.queued},
                  {"executing", c.executing},
                  {"cold_starting", c.cold_starting},
                  {"warm_idle", c.warm_idle},
                  {"busy_instances", c.busy_instances},
                  {"spawned_instances", c.spawned_instances},
                  {"peak_admitted", c.peak_admitted}};
    });
    res.set_content(body.dump(), "application/json");
  });

  server.Get(R"(/admin/trace/([\w\-]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               const std::string deployment_id = req.matches[1];
               json rows = json::array();
               bool known = false;
               runner_.with_engine([&](Engine& engine) {
                 if (engine.find_deployment(deployment_id) == nullptr) return;
                 known = true;
                 for (const auto& [t, n] : engine.instance_trace(deployment_id)) {
                   rows.push_back(json{{"t_ns", t}, {"instances", n}});
                 }
               });
               if (!known) {
                 res.status = 404;
                 res.set_content(json{{"error", "no such deployment"}}.dump(),
                                 "application/json");
                 return;
               }
               res.set_content(rows.dump(), "application/json");
             });

  if (port == 0) {
    port_ = server.bind_to_any_port(host);
    if (port_ <= 0) throw std::runtime_error("sim server: bind failed on " + host);
  } else {
    if (!server.bind_to_port(host, port)) {
      throw std::runtime_error("sim server: bind failed on " + host + ":" +
                               std::to_string(port));
    }
    port_ = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  server.wait_until_ready();
}

void SimHttpServer::stop() {
  if (impl_ && impl_->thread.joinable()) {
    impl_->server.stop();
    impl_->thread.join();
  }
}

}  // namespace faasbench::sim

#include "faasbench/workloads/server.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "faasbench/workloads/workloads.hpp"

namespace faasbench::workloads {

using nlohmann::json;

void CustomRegistry::add(const std::string& name, CustomHandler handler) {
  if (name.empty()) throw std::invalid_argument("custom handler name empty");
  handlers_[name] = std::move(handler);
}

const CustomHandler* CustomRegistry::find(const std::string& name) const {
  auto it = handlers_.find(name);
  return it == handlers_.end() ? nullptr : &it->second;
}

std::vector<std::string> CustomRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(handlers_.size());
  for (const auto& [name, handler] : handlers_) out.push_back(name);
  return out;
}

struct WorkloadServer::Impl {
  httplib::Server server;
  std::thread thread;
};

namespace {

double now_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::uint64_t param_u64(const httplib::Request& req, const char* key,
                        std::uint64_t fallback) {
  if (!req.has_param(key)) return fallback;
  return std::stoull(req.get_param_value(key));
}

}  // namespace

WorkloadServer::WorkloadServer() : impl_(std::make_unique<Impl>()) {
  std::random_device rd;
  std::ostringstream id;
  id << "wl-" << std::hex << rd() << rd();
  instance_id_ = id.str();
}

WorkloadServer::~WorkloadServer() { stop(); }

std::string WorkloadServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

void WorkloadServer::start(const std::string& host, int port) {
  auto& server = impl_->server;
  server.new_task_queue = [] { return new httplib::ThreadPool(64); };

  // Every response carries the serving instance id, like a provider gateway.
  const std::string instance = instance_id_;

  server.Get("/fact", [instance](const httplib::Request& req, httplib::Response& res) {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t n = 0;
    try {
      n = param_u64(req, "n", kDefaultFactInput);
      if (n < 1) throw std::invalid_argument("n must be >= 1");
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      return;
    }
    const auto factors = run_fact(n);
    json body{{"function", "faas-fact"},
              {"n", n},
              {"factors", factors},
              {"duration_ms", now_ms_since(t0)}};
    res.set_header("x-instance-id", instance);
    res.set_content(body.dump(), "application/json");
  });

  server.Get("/matrix", [instance](const httplib::Request& req, httplib::Response& res) {
    const auto t0 = std::chrono::steady_clock::now();
    int dim = 0;
    std::uint64_t seed = 0;
    try {
      dim = static_cast<int>(param_u64(req, "dim", kDefaultMatrixDim));
      seed = param_u64(req, "seed", 0);
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      return;
    }
    std::uint64_t checksum = 0;
    try {
      checksum = run_matrix_mult(dim, seed);
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      return;
    }
    json body{{"function", "faas-matrix-mult"},
              {"dim", dim},
              {"seed", seed},
              {"checksum", checksum},
              {"duration_ms", now_ms_since(t0)}};
    res.set_header("x-instance-id", instance);
    res.set_content(body.dump(), "application/json");
  });

  server.Get("/netlatency", [instance](const httplib::Request&, httplib::Response& res) {
    res.set_header("x-instance-id", instance);
    res.set_header("x-function", "faas-netlatency");
    // Pads the response towards the ~500 byte envelope a provider gateway
    // produces once its standard headers are included.
    res.set_header("x-gateway-trace",
                   "00-0123456789abcdef0123456789abcdef-0123456789abcdef-01;"
                   "sampled=0;flags=none;upstream=faas-netlatency-gw");
    const auto body = netlatency_body();
    res.set_content(std::string(body), "application/json");
  });

  server.Get("/diskio", [instance](const httplib::Request& req, httplib::Response& res) {
    std::int64_t size = 0;
    std::uint64_t seed = 0;
    try {
      size = static_cast<std::int64_t>(param_u64(req, "size", 1 << 20));
      seed = param_u64(req, "seed", 0);
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      return;
    }
    try {
      const DiskIoResult r = run_diskio(size, seed);
      json body{{"function", "faas-diskio"}, {"bytes", r.bytes},
                {"digest", r.digest},       {"write_ms", r.write_ms},
                {"read_ms", r.read_ms}};
      res.set_header("x-instance-id", instance);
      res.set_content(body.dump(), "application/json");
    } catch (const std::invalid_argument& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });

  // Holds each request for the given time; lets tests and calibration runs
  // model a stalled upstream.
  server.Get("/stall", [instance](const httplib::Request& req, httplib::Response& res) {
    const auto ms = param_u64(req, "ms", 1000);
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
    res.set_header("x-instance-id", instance);
    res.set_content(json{{"function", "stall"}, {"ms", ms}}.dump(), "application/json");
  });

  auto handle_custom = [this, instance](const httplib::Request& req,
                                        httplib::Response& res) {
    const std::string name = req.matches[1];
    const CustomHandler* handler = custom_.find(name);
    if (handler == nullptr) {
      res.status = 404;
      res.set_content(json{{"error", "no such custom workload: " + name}}.dump(),
                      "application/json");
      return;
    }
    CustomRequest creq;
    for (const auto& [k, v] : req.params) creq.params[k] = v;
    creq.body = req.body;
    const CustomResponse resp = (*handler)(creq);
    res.status = resp.status;
    res.set_header("x-instance-id", instance);
    res.set_content(resp.body, resp.content_type);
  };
  server.Get(R"(/custom/([\w\-]+))", handle_custom);
  server.Post(R"(/custom/([\w\-]+))", handle_custom);

  if (port == 0) {
    port_ = server.bind_to_any_port(host);
    if (port_ <= 0) throw std::runtime_error("workload server: bind failed on " + host);
  } else {
    if (!server.bind_to_port(host, port)) {
      throw std::runtime_error("workload server: bind failed on " + host + ":" +
                               std::to_string(port));
    }
    port_ = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  server.wait_until_ready();
}

void WorkloadServer::stop() {
  if (impl_ && impl_->thread.joinable()) {
    impl_->server.stop();
    impl_->thread.join();
  }
}

}  // namespace faasbench::workloads

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace faasbench {

enum class DeployState { Deploying, Ready, Failed, Removed };

const char* to_string(DeployState s);

// One deployed function instance group on a provider.
struct Deployment {
  std::string id;
  std::string provider;
  std::string region;
  std::string workload;
  std::string runtime_label;
  int memory_mb{128};
  std::int64_t timeout_ms{30'000};
  std::string endpoint;
  DeployState state{DeployState::Deploying};
  std::string failure_cause;

  // Legal transitions: Deploying -> {Ready, Failed}, Ready -> Removed.
  // Anything else throws std::logic_error.
  void transition(DeployState to);
};

enum class SampleStatus { Ok, HttpError, Timeout, Rejected };

const char* to_string(SampleStatus s);
SampleStatus sample_status_from_string(const std::string& s);

// One invocation record.
struct Sample {
  std::string deployment_id;
  std::int64_t seq{0};
  std::int64_t intended_start_ns{0};
  std::int64_t actual_start_ns{0};
  // Measured from intended_start (coordinated-omission corrected).
  std::int64_t latency_ns{0};
  // Measured from actual_start.
  std::int64_t service_latency_ns{0};
  SampleStatus status{SampleStatus::Ok};
  int http_code{0};  // set when status == HttpError
  std::string instance_id;
  std::optional<bool> cold;
  std::int64_t response_bytes{0};

  bool ok() const { return status == SampleStatus::Ok; }
  void check() const;  // throws std::invalid_argument on broken invariants
};

}  // namespace faasbench

#include "faasbench/model/deployment.hpp"

#include <stdexcept>

namespace faasbench {

const char* to_string(DeployState s) {
  switch (s) {
    case DeployState::Deploying: return "deploying";
    case DeployState::Ready: return "ready";
    case DeployState::Failed: return "failed";
    case DeployState::Removed: return "removed";
  }
  throw std::invalid_argument("bad deploy state value");
}

void Deployment::transition(DeployState to) {
  const bool legal = (state == DeployState::Deploying &&
                      (to == DeployState::Ready || to == DeployState::Failed)) ||
                     (state == DeployState::Ready && to == DeployState::Removed);
  if (!legal) {
    throw std::logic_error(std::string("illegal deployment transition ") +
                           to_string(state) + " -> " + to_string(to));
  }
  state = to;
}

const char* to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Ok: return "ok";
    case SampleStatus::HttpError: return "http_error";
    case SampleStatus::Timeout: return "timeout";
    case SampleStatus::Rejected: return "rejected";
  }
  throw std::invalid_argument("bad sample status value");
}

SampleStatus sample_status_from_string(const std::string& s) {
  if (s == "ok") return SampleStatus::Ok;
  if (s == "http_error") return SampleStatus::HttpError;
  if (s == "timeout") return SampleStatus::Timeout;
  if (s == "rejected") return SampleStatus::Rejected;
  throw std::invalid_argument("unknown sample status: " + s);
}

void Sample::check() const {
  if (actual_start_ns < intended_start_ns) {
    throw std::invalid_argument("sample: actual_start < intended_start");
  }
  if (service_latency_ns < 0 || latency_ns < service_latency_ns) {
    throw std::invalid_argument("sample: latency < service_latency or negative");
  }
  if (status == SampleStatus::HttpError && http_code == 0) {
    throw std::invalid_argument("sample: http_error without code");
  }
}

}  // namespace faasbench

#pragma once

#include <vector>

#include "faasbench/injector/plan.hpp"

namespace faasbench::injector {

// Constant-throughput open-loop run against a live HTTP endpoint.
//
// Requests are scheduled at intended_start = t0 + i/rate and dispatched by a
// connection pool as soon as a connection frees up; latency is measured from
// intended_start, so a stalled server inflates the recorded latency of every
// queued send. Every scheduled send yields exactly one Sample.
std::vector<RateResult> run_stress(const StressPlan& plan, const SampleSink& sink = {});

}  // namespace faasbench::injector

#pragma once

#include <vector>

#include "faasbench/injector/plan.hpp"

namespace faasbench::injector {

// Sends one request per target per interval against live HTTP endpoints.
// Per-sample errors are recorded, never abort the run. Pacing follows an
// absolute schedule (drift < 1% over the run).
std::vector<Sample> run_probe(const ProbePlan& plan, const SampleSink& sink = {});

}  // namespace faasbench::injector

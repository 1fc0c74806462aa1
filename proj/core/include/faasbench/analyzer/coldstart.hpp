#pragma once

#include <string>
#include <vector>

#include "faasbench/model/deployment.hpp"

namespace faasbench::analyzer {

enum class DetectionMethod { InstanceId, ColdFlag, LatencyOutlier };

const char* to_string(DetectionMethod m);
DetectionMethod detection_method_from_string(const std::string& s);

struct LabeledSample {
  Sample sample;
  bool cold{false};
};

// Labels every OK sample of one deployment as cold or warm.
//   InstanceId     first sample per unseen instance id (in service order)
//   ColdFlag       the provider-reported flag
//   LatencyOutlier latency > warm median + k * IQR (fallback without ids)
// Throws std::invalid_argument when the method's data is missing — there is
// no silent fallback.
std::vector<LabeledSample> detect_cold_starts(std::vector<Sample> samples,
                                              DetectionMethod method,
                                              double outlier_k = 3.0);

struct BoxStats {
  double mean{0};
  double min{0};
  double q1{0};
  double median{0};
  double q3{0};
  double max{0};
};

struct ColdStartReport {
  std::string provider;
  std::string runtime;
  DetectionMethod method{DetectionMethod::InstanceId};
  std::int64_t cold_count{0};
  std::int64_t warm_count{0};
  double warm_mean_ms{0};
  // Per cold sample: latency minus the warm mean, clamped at zero.
  BoxStats overhead_ms;
};

// Summarizes cold-start overheads. Requires at least one cold and one warm
// sample; throws std::invalid_argument otherwise. The warm mean excludes the
// first sample seen on each instance when ids are available.
ColdStartReport cold_overhead(const std::vector<LabeledSample>& labeled);

}  // namespace faasbench::analyzer

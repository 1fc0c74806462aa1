#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "faasbench/model/deployment.hpp"

namespace faasbench::injector {

struct FetchResult {
  SampleStatus status{SampleStatus::Ok};
  int http_code{0};
  std::int64_t response_bytes{0};
  std::string instance_id;
  std::optional<bool> cold;
};

// One keep-alive connection to a single origin. Not thread-safe; each
// injector worker owns its own.
class HttpConnection {
public:
  HttpConnection(const std::string& url, std::int64_t timeout_ms);
  ~HttpConnection();
  HttpConnection(HttpConnection&&) noexcept;
  HttpConnection& operator=(HttpConnection&&) noexcept;

  FetchResult get();
  const std::string& path() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace faasbench::injector

#include "faasbench/injector/http_client.hpp"

#include <httplib.h>

#include "faasbench/util/strings.hpp"

namespace faasbench::injector {

struct HttpConnection::Impl {
  Impl(const util::ParsedUrl& url, std::int64_t timeout_ms)
      : client(url.host, url.port), path(url.path) {
    client.set_connection_timeout(std::chrono::milliseconds(timeout_ms));
    client.set_read_timeout(std::chrono::milliseconds(timeout_ms));
    client.set_write_timeout(std::chrono::milliseconds(timeout_ms));
    client.set_keep_alive(true);
  }
  httplib::Client client;
  std::string path;
};

HttpConnection::HttpConnection(const std::string& url, std::int64_t timeout_ms)
    : impl_(std::make_unique<Impl>(util::parse_url(url), timeout_ms)) {}

HttpConnection::~HttpConnection() = default;
HttpConnection::HttpConnection(HttpConnection&&) noexcept = default;
HttpConnection& HttpConnection::operator=(HttpConnection&&) noexcept = default;

const std::string& HttpConnection::path() const { return impl_->path; }

FetchResult HttpConnection::get() {
  FetchResult out;
  httplib::Result res = impl_->client.Get(impl_->path);
  if (!res) {
    out.status = res.error() == httplib::Error::Read || res.error() == httplib::Error::ConnectionTimeout
                     ? SampleStatus::Timeout
                     : SampleStatus::Rejected;
    return out;
  }
  out.http_code = res->status;
  out.status = res->status >= 200 && res->status < 300 ? SampleStatus::Ok
                                                       : SampleStatus::HttpError;
  out.response_bytes = static_cast<std::int64_t>(res->body.size());
  if (res->has_header("x-sim-instance-id")) {
    out.instance_id = res->get_header_value("x-sim-instance-id");
  } else if (res->has_header("x-instance-id")) {
    out.instance_id = res->get_header_value("x-instance-id");
  }
  if (res->has_header("x-sim-cold")) {
    out.cold = res->get_header_value("x-sim-cold") == "true";
  }
  return out;
}

}  // namespace faasbench::injector

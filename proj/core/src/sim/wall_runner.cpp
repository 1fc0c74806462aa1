#include "faasbench/sim/wall_runner.hpp"

#include <chrono>
#include <condition_variable>
#include <future>
#include <map>
#include <mutex>
#include <thread>

namespace faasbench::sim {

namespace {
using Clock = std::chrono::steady_clock;
}

struct WallClockRunner::Impl {
  explicit Impl(Engine e) : engine(std::move(e)), start(Clock::now()) {
    loop = std::thread([this] { run(); });
  }

  std::int64_t wall_elapsed_ns() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  }

  void run() {
    std::unique_lock lock(mutex);
    while (running) {
      const std::int64_t next = engine.next_event_ns();
      if (next < 0) {
        cv.wait(lock);
      } else {
        const auto wake = start + std::chrono::nanoseconds(next);
        cv.wait_until(lock, wake);
      }
      if (!running) break;
      engine.advance_to(wall_elapsed_ns());
      deliver_locked();
    }
  }

  // Hand completed samples to their waiting callers.
  void deliver_locked() {
    for (Sample& s : engine.take_samples()) {
      auto it = waiters.find(s.seq);
      if (it != waiters.end()) {
        it->second.set_value(std::move(s));
        waiters.erase(it);
      }
    }
  }

  Engine engine;
  Clock::time_point start;
  std::thread loop;
  std::mutex mutex;
  std::condition_variable cv;
  std::map<std::int64_t, std::promise<Sample>> waiters;
  std::int64_t next_seq{0};
  bool running{true};
};

WallClockRunner::WallClockRunner(Engine engine)
    : impl_(std::make_unique<Impl>(std::move(engine))) {}

WallClockRunner::~WallClockRunner() { stop(); }

void WallClockRunner::stop() {
  if (!impl_) return;
  {
    std::lock_guard lock(impl_->mutex);
    if (!impl_->running) return;
    impl_->running = false;
  }
  impl_->cv.notify_all();
  if (impl_->loop.joinable()) impl_->loop.join();
}

Sample WallClockRunner::invoke(const std::string& deployment_id) {
  std::future<Sample> future;
  {
    std::lock_guard lock(impl_->mutex);
    const std::int64_t seq = impl_->next_seq++;
    std::promise<Sample> promise;
    future = promise.get_future();
    impl_->waiters.emplace(seq, std::move(promise));
    try {
      impl_->engine.submit(impl_->wall_elapsed_ns(), deployment_id, seq);
    } catch (...) {
      impl_->waiters.erase(seq);
      throw;
    }
    // Rejections materialize synchronously inside submit.
    impl_->deliver_locked();
  }
  impl_->cv.notify_all();
  return future.get();
}

void WallClockRunner::with_engine(const std::function<void(Engine&)>& fn) {
  std::lock_guard lock(impl_->mutex);
  fn(impl_->engine);
  impl_->cv.notify_all();
}

}  // namespace faasbench::sim

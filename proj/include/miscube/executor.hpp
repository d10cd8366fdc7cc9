#pragma once
// A small persistent worker pool. Tasks are indexed [0, ntasks) and claimed
// through an atomic cursor; callers make runs deterministic by writing task
// i's result into slot i and reducing sequentially afterwards, so the claim
// order can never leak into observable output.
//
// Workers spin briefly before blocking so back-to-back parallel_for calls on
// microsecond-scale workloads (benchmark reps) do not pay a wakeup latency per
// call.

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace miscube {

class Executor {
 public:
  explicit Executor(int workers);
  ~Executor();

  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  int workers() const { return workers_; }

  // Runs f(i) for every i in [0, ntasks); f must be safe to call concurrently.
  // Blocks until all tasks finish. The calling thread participates.
  void parallel_for(std::size_t ntasks, const std::function<void(std::size_t)>& f);

 private:
  void worker_loop();
  void drain();

  int workers_;
  std::vector<std::thread> threads_;

  std::mutex m_;
  std::condition_variable cv_;
  std::atomic<std::uint64_t> generation_{0};
  std::atomic<bool> quit_{false};

  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t ntasks_ = 0;
  std::atomic<std::size_t> cursor_{0};
  std::atomic<int> active_{0};
};

}  // namespace miscube

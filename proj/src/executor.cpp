#include "miscube/executor.hpp"

#include <stdexcept>

namespace miscube {

Executor::Executor(int workers) : workers_(workers) {
  if (workers < 1) throw std::invalid_argument("Executor: workers must be >= 1");
  threads_.reserve(static_cast<std::size_t>(workers - 1));
  for (int t = 0; t < workers - 1; ++t) threads_.emplace_back([this] { worker_loop(); });
}

Executor::~Executor() {
  {
    std::lock_guard<std::mutex> lk(m_);
    quit_.store(true, std::memory_order_relaxed);
    generation_.fetch_add(1, std::memory_order_release);
  }
  cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void Executor::drain() {
  for (;;) {
    std::size_t i = cursor_.fetch_add(1, std::memory_order_relaxed);
    if (i >= ntasks_) break;
    (*job_)(i);
  }
}

void Executor::worker_loop() {
  std::uint64_t seen = 0;
  for (;;) {
    // Spin a little before sleeping; benchmark reps issue pools of tiny jobs.
    for (int spin = 0; spin < 4096; ++spin) {
      if (generation_.load(std::memory_order_acquire) != seen) break;
      std::this_thread::yield();
    }
    {
      std::unique_lock<std::mutex> lk(m_);
      cv_.wait(lk, [&] { return generation_.load(std::memory_order_acquire) != seen; });
      seen = generation_.load(std::memory_order_acquire);
    }
    if (quit_.load(std::memory_order_relaxed)) return;
    active_.fetch_add(1, std::memory_order_acq_rel);
    drain();
    active_.fetch_sub(1, std::memory_order_acq_rel);
  }
}

void Executor::parallel_for(std::size_t ntasks, const std::function<void(std::size_t)>& f) {
  if (ntasks == 0) return;
  if (workers_ == 1 || ntasks == 1) {
    for (std::size_t i = 0; i < ntasks; ++i) f(i);
    return;
  }
  job_ = &f;
  ntasks_ = ntasks;
  cursor_.store(0, std::memory_order_relaxed);
  {
    std::lock_guard<std::mutex> lk(m_);
    generation_.fetch_add(1, std::memory_order_release);
  }
  cv_.notify_all();
  drain();
  // Tasks are all claimed once drain() returns; wait for claimed ones to finish.
  while (active_.load(std::memory_order_acquire) != 0) std::this_thread::yield();
  job_ = nullptr;
  ntasks_ = 0;
}

}  // namespace miscube

#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace epsmax {

/*
 * Minimal persistent worker pool with deterministic chunking. Work is cut
 * into fixed-size chunks independent of the worker count, so per-chunk
 * partial results (and therefore reductions combined in chunk order) are
 * bitwise identical for any number of workers.
 */
class ThreadPool {
 public:
  static constexpr std::size_t kChunk = 2048;

  explicit ThreadPool(int workers) : stop_(false) {
    const int n = workers > 1 ? workers - 1 : 0;  // calling thread participates
    for (int i = 0; i < n; ++i)
      threads_.emplace_back([this] { worker_loop(); });
  }

  ~ThreadPool() {
    {
      std::unique_lock<std::mutex> lock(mu_);
      stop_ = true;
      cv_.notify_all();
    }
    for (auto& th : threads_) th.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  // fn(chunk_index, begin, end); chunks are [k*kChunk, min((k+1)*kChunk, n)).
  void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    if (threads_.empty() || nchunks == 1) {
      for (std::size_t k = 0; k < nchunks; ++k)
        fn(k, k * kChunk, std::min(n, (k + 1) * kChunk));
      return;
    }
    {
      std::unique_lock<std::mutex> lock(mu_);
      job_ = &fn;
      total_ = n;
      next_ = 0;
      pending_ = nchunks;
      cv_.notify_all();
    }
    run_chunks();  // calling thread helps
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
  }

  static std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

 private:
  void run_chunks() {
    for (;;) {
      std::size_t k, total;
      const std::function<void(std::size_t, std::size_t, std::size_t)>* job;
      {
        std::unique_lock<std::mutex> lock(mu_);
        job = job_;
        total = total_;
        if (!job || next_ * kChunk >= total) return;
        k = next_++;
      }
      (*job)(k, k * kChunk, std::min(total, (k + 1) * kChunk));
      {
        std::unique_lock<std::mutex> lock(mu_);
        if (--pending_ == 0) done_cv_.notify_all();
      }
    }
  }

  void worker_loop() {
    for (;;) {
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [this] { return stop_ || (job_ && next_ * kChunk < total_); });
        if (stop_) return;
      }
      run_chunks();
    }
  }

  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(std::size_t, std::size_t, std::size_t)>* job_ = nullptr;
  std::size_t total_ = 0, next_ = 0, pending_ = 0;
  bool stop_;
};

}  // namespace epsmax

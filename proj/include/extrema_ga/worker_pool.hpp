#pragma once

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ega {

struct PhaseTiming {
    double wall_seconds = 0.0;
    /// Busy time summed over all workers that took part.
    double busy_seconds = 0.0;
};

/// Fixed-size pool executing index-partitioned loops.
///
/// The calling thread acts as worker 0; `threads - 1` helpers wait for work.
/// Every parallel_for is a full barrier. Worker w always receives the w-th
/// contiguous chunk, so placement is a pure function of (count, threads).
class WorkerPool {
  public:
    using RangeFn = std::function<void(std::size_t begin, std::size_t end, unsigned worker)>;

    /// With pin = true each worker is restricted to a distinct allowed CPU
    /// (round-robin when there are more workers than CPUs). The caller's
    /// original affinity is restored on destruction.
    explicit WorkerPool(unsigned threads, bool pin = false);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    unsigned size() const noexcept { return threads_; }
    bool pinned() const noexcept { return pinned_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    PhaseTiming parallel_for(std::size_t count, const RangeFn& fn);

    /// Busy seconds per worker, accumulated over every parallel_for so far.
    const std::vector<double>& busy_seconds() const noexcept { return busy_; }
    double total_busy_seconds() const noexcept;

  private:
    void helper_loop(unsigned worker);
    void run_chunk(unsigned worker);

    unsigned threads_;
    bool pinned_ = false;
    std::vector<std::string> warnings_;
    std::vector<int> caller_cpus_;
    std::vector<double> busy_;
    std::vector<double> last_busy_;

    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    std::uint64_t epoch_ = 0;
    unsigned pending_ = 0;
    bool stopping_ = false;
    const RangeFn* job_ = nullptr;
    std::size_t job_count_ = 0;
    std::exception_ptr error_;

    std::vector<std::thread> helpers_;
};

} // namespace ega

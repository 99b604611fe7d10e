#include "extrema_ga/worker_pool.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "extrema_ga/affinity.hpp"

namespace ega {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

WorkerPool::WorkerPool(unsigned threads, bool pin)
    : threads_(threads), busy_(threads, 0.0), last_busy_(threads, 0.0) {
    if (threads == 0) throw std::invalid_argument("worker pool needs at least one thread");

    std::vector<int> cpus;
    if (pin) {
        cpus = affinity::allowed_cpus();
        if (cpus.empty()) {
            warnings_.emplace_back("CPU pinning is not supported on this platform; running unpinned");
        } else {
            if (threads > cpus.size()) {
                warnings_.emplace_back("more workers (" + std::to_string(threads) +
                                       ") than allowed CPUs (" + std::to_string(cpus.size()) +
                                       "); pinning round-robin");
            }
            caller_cpus_ = affinity::current_thread_cpus();
            pinned_ = affinity::pin_current_thread(cpus[0]);
            if (!pinned_) warnings_.emplace_back("could not pin the calling thread");
        }
    }

    helpers_.reserve(threads - 1);
    for (unsigned w = 1; w < threads; ++w) {
        const int cpu = pinned_ ? cpus[w % cpus.size()] : -1;
        helpers_.emplace_back([this, w, cpu] {
            if (cpu >= 0) affinity::pin_current_thread(cpu);
            helper_loop(w);
        });
    }
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : helpers_) t.join();
    if (pinned_ && !caller_cpus_.empty()) affinity::set_current_thread_cpus(caller_cpus_);
}

void WorkerPool::run_chunk(unsigned worker) {
    const std::size_t begin = job_count_ * worker / threads_;
    const std::size_t end = job_count_ * (worker + 1) / threads_;
    const auto start = Clock::now();
    try {
        if (begin < end) (*job_)(begin, end, worker);
    } catch (...) {
        std::lock_guard lock(mutex_);
        if (!error_) error_ = std::current_exception();
    }
    last_busy_[worker] = seconds_since(start);
}

void WorkerPool::helper_loop(unsigned worker) {
    std::uint64_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mutex_);
            start_cv_.wait(lock, [&] { return stopping_ || epoch_ != seen; });
            if (stopping_) return;
            seen = epoch_;
        }
        run_chunk(worker);
        {
            std::lock_guard lock(mutex_);
            if (--pending_ == 0) done_cv_.notify_one();
        }
    }
}

PhaseTiming WorkerPool::parallel_for(std::size_t count, const RangeFn& fn) {
    const auto start = Clock::now();
    job_ = &fn;
    job_count_ = count;
    error_ = nullptr;
    if (threads_ > 1) {
        {
            std::lock_guard lock(mutex_);
            pending_ = threads_ - 1;
            ++epoch_;
        }
        start_cv_.notify_all();
    }
    run_chunk(0);
    if (threads_ > 1) {
        std::unique_lock lock(mutex_);
        done_cv_.wait(lock, [&] { return pending_ == 0; });
    }
    job_ = nullptr;

    PhaseTiming timing;
    timing.wall_seconds = seconds_since(start);
    for (unsigned w = 0; w < threads_; ++w) {
        busy_[w] += last_busy_[w];
        timing.busy_seconds += last_busy_[w];
    }
    if (error_) std::rethrow_exception(error_);
    return timing;
}

double WorkerPool::total_busy_seconds() const noexcept {
    return std::accumulate(busy_.begin(), busy_.end(), 0.0);
}

} // namespace ega

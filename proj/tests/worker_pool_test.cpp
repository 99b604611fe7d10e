#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "extrema_ga/affinity.hpp"
#include "extrema_ga/worker_pool.hpp"

namespace ega {
namespace {

TEST(WorkerPool, CoversEveryIndexOnce) {
    for (unsigned threads : {1U, 2U, 3U, 8U}) {
        WorkerPool pool(threads);
        for (std::size_t count : {0U, 1U, 7U, 1000U}) {
            std::vector<int> hits(count, 0);
            pool.parallel_for(count, [&](std::size_t b, std::size_t e, unsigned) {
                for (std::size_t i = b; i < e; ++i) ++hits[i];
            });
            for (int h : hits) ASSERT_EQ(h, 1);
        }
    }
}

TEST(WorkerPool, StaticChunkAssignment) {
    WorkerPool pool(4);
    std::vector<unsigned> owner(10);
    pool.parallel_for(10, [&](std::size_t b, std::size_t e, unsigned w) {
        for (std::size_t i = b; i < e; ++i) owner[i] = w;
    });
    EXPECT_EQ(owner, (std::vector<unsigned>{0, 0, 1, 1, 1, 2, 2, 3, 3, 3}));
}

TEST(WorkerPool, PropagatesExceptions) {
    WorkerPool pool(3);
    EXPECT_THROW(pool.parallel_for(30,
                                   [](std::size_t b, std::size_t, unsigned) {
                                       if (b > 0) throw std::runtime_error("boom");
                                   }),
                 std::runtime_error);
    std::atomic<int> calls{0};
    pool.parallel_for(3, [&](std::size_t, std::size_t, unsigned) { ++calls; });
    EXPECT_EQ(calls.load(), 3);
}

TEST(WorkerPool, AccumulatesBusyTime) {
    WorkerPool pool(2);
    const PhaseTiming t = pool.parallel_for(2, [](std::size_t, std::size_t, unsigned) {
        volatile double x = 0;
        for (int i = 0; i < 200000; ++i) x = x + 1.0;
    });
    EXPECT_GT(t.busy_seconds, 0.0);
    EXPECT_GE(t.wall_seconds, 0.0);
    EXPECT_EQ(pool.busy_seconds().size(), 2U);
    EXPECT_NEAR(pool.total_busy_seconds(), t.busy_seconds, 1e-12);
}

TEST(WorkerPool, PinningRestoresCallerAffinity) {
    const std::vector<int> before = affinity::current_thread_cpus();
    {
        WorkerPool pool(2, true);
        pool.parallel_for(4, [](std::size_t, std::size_t, unsigned) {});
        if (!pool.pinned()) {
            EXPECT_FALSE(pool.warnings().empty());
        }
    }
    EXPECT_EQ(affinity::current_thread_cpus(), before);
}

TEST(Affinity, ReportsCpus) {
    EXPECT_GE(affinity::hardware_threads(), 1U);
    EXPECT_GE(affinity::physical_cores(), 1U);
    EXPECT_LE(affinity::physical_cores(), affinity::hardware_threads());
}

} // namespace
} // namespace ega

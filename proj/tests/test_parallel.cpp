#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "bcert/parallel.hpp"

using bcert::util::parallel_for;
using bcert::util::resolve_thread_count;

TEST_SUITE("parallel") {

TEST_CASE("every index is visited exactly once") {
    const long count = 1000;
    std::vector<std::atomic<int>> hits(count);
    for (auto& h : hits) h.store(0);
    parallel_for(count, 4, [&](long i) { hits[static_cast<size_t>(i)].fetch_add(1); });
    for (long i = 0; i < count; ++i) CHECK(hits[static_cast<size_t>(i)].load() == 1);
}

TEST_CASE("single-threaded path and empty ranges") {
    std::vector<int> order;
    parallel_for(5, 1, [&](long i) { order.push_back(static_cast<int>(i)); });
    CHECK(order == std::vector<int>{0, 1, 2, 3, 4});
    bool ran = false;
    parallel_for(0, 4, [&](long) { ran = true; });
    CHECK_FALSE(ran);
    parallel_for(-3, 4, [&](long) { ran = true; });
    CHECK_FALSE(ran);
}

TEST_CASE("results are addressable by index regardless of arrival order") {
    const long count = 257;
    std::vector<long> out(count, -1);
    parallel_for(count, 8, [&](long i) { out[static_cast<size_t>(i)] = i * i; });
    for (long i = 0; i < count; ++i) CHECK(out[static_cast<size_t>(i)] == i * i);
}

TEST_CASE("exceptions propagate to the caller") {
    CHECK_THROWS_AS(
        parallel_for(100, 4,
                     [](long i) {
                         if (i == 37) throw std::runtime_error("task failure");
                     }),
        std::runtime_error);
}

TEST_CASE("thread count resolution") {
    CHECK(resolve_thread_count(3) == 3);
    CHECK(resolve_thread_count(0) >= 1);

    setenv("BCERT_THREADS", "2", 1);
    CHECK(resolve_thread_count(0) == 2);
    CHECK(resolve_thread_count(5) == 5);  // explicit request wins over the env
    setenv("BCERT_THREADS", "garbage", 1);
    CHECK(resolve_thread_count(0) >= 1);  // malformed env falls back to hardware
    setenv("BCERT_THREADS", "0", 1);
    CHECK(resolve_thread_count(0) >= 1);
    setenv("BCERT_THREADS", "9999", 1);   // above the sanity cap
    CHECK(resolve_thread_count(0) >= 1);
    unsetenv("BCERT_THREADS");
}

}  // TEST_SUITE

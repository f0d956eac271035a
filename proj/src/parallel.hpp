#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace mincodes::detail {

// Smallest index i in [0, count) with fails(i) true. make_worker() is called
// once per worker and returns that worker's predicate, so predicates may keep
// private scratch state. The answer does not depend on the worker count.
template <class MakeWorker>
std::optional<std::size_t> first_failure(std::size_t count, unsigned jobs, MakeWorker&& make_worker) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    if (jobs <= 1 || count < 2) {
        auto fails = make_worker();
        for (std::size_t i = 0; i < count; ++i)
            if (fails(i)) return i;
        return std::nullopt;
    }

    constexpr std::size_t chunk = 16;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};
    auto run = [&] {
        auto fails = make_worker();
        for (;;) {
            const std::size_t start = next.fetch_add(chunk);
            if (start >= count || start > best.load()) return;
            const std::size_t stop = std::min(count, start + chunk);
            for (std::size_t i = start; i < stop; ++i) {
                if (i > best.load()) return;
                if (fails(i)) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    if (best.load() == none) return std::nullopt;
    return best.load();
}

}  // namespace mincodes::detail

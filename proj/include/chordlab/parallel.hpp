#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace chordlab {

/// Half-open rank range [begin, end).
struct RankRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Splits [0, total) into `shards` contiguous ranges of near-equal size.
inline std::vector<RankRange> split_ranks(std::uint64_t total, std::size_t shards) {
    shards = std::max<std::size_t>(1, shards);
    std::vector<RankRange> out;
    out.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
        out.push_back({total * s / shards, total * (s + 1) / shards});
    }
    return out;
}

/// Evaluates `work(range)` for every shard of [0, total) on up to `jobs`
/// threads. Results come back in shard order regardless of `jobs`, so
/// folding them left to right is deterministic.
template <typename Work>
auto map_shards(std::uint64_t total, unsigned jobs, Work work) -> std::vector<decltype(work(RankRange{}))> {
    using Result = decltype(work(RankRange{}));
    jobs = std::max(1U, jobs);
    const auto ranges = split_ranks(total, jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 4);
    std::vector<std::optional<Result>> slots(ranges.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < ranges.size(); i = next++) {
            try {
                slots[i].emplace(work(ranges[i]));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const auto threads = std::min<std::size_t>(jobs, ranges.size());
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<Result> results;
    results.reserve(slots.size());
    for (auto& slot : slots) {
        results.push_back(std::move(*slot));
    }
    return results;
}

} // namespace chordlab

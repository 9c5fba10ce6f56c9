#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lingame {

/// Split [0, total) into one contiguous chunk per worker and run `body`
/// on each chunk (worker threads for workers > 1). Chunks are fixed by
/// (total, workers) alone, so reductions over per-chunk results that are
/// associative and commutative give scheduling-independent answers.
inline void for_each_chunk(std::uint64_t total, int workers,
                           const std::function<void(int chunk, std::uint64_t lo, std::uint64_t hi)>& body) {
    if (workers < 1) workers = 1;
    if (total == 0) return;
    std::uint64_t w = static_cast<std::uint64_t>(workers);
    if (w > total) w = total;
    if (w == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(w);
    std::uint64_t base = total / w, extra = total % w, lo = 0;
    for (std::uint64_t c = 0; c < w; ++c) {
        std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
        threads.emplace_back(body, static_cast<int>(c), lo, hi);
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

} // namespace lingame

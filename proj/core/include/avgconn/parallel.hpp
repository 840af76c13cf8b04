#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace avgconn {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, one per worker. Chunk
/// boundaries depend only on count and the resolved thread count, so
/// per-chunk results can be merged in chunk order deterministically.
inline void parallel_chunks(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), count == 0 ? 1 : count);
    if (workers <= 1) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t per = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t end = begin + per + (w < extra ? 1 : 0);
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace avgconn

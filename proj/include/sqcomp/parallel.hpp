#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sqcomp {

// Splits [0, count) into at most `threads` contiguous chunks and calls
// fn(chunk_index, lo, hi) for each. Chunk boundaries depend only on count
// and threads, so callers that write per-chunk results get deterministic
// merges. threads <= 1 runs inline on the calling thread.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t c = 0; c < workers; ++c) {
            const std::size_t lo = count * c / workers;
            const std::size_t hi = count * (c + 1) / workers;
            pool.emplace_back([&, c, lo, hi] {
                try {
                    fn(c, lo, hi);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Number of chunks parallel_chunks will use.
inline std::size_t chunk_count(std::size_t count, unsigned threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
}

}  // namespace sqcomp

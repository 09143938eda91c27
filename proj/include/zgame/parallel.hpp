#ifndef ZGAME_PARALLEL_HPP
#define ZGAME_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace zgame {

// Chunked index loop. The body must write only to disjoint slots; result
// assembly is by index, so the outcome does not depend on thread count.
template <typename Fn>
void parallel_for(size_t begin, size_t end, unsigned threads, Fn&& fn) {
    const size_t n = end > begin ? end - begin : 0;
    if (threads <= 1 || n < 512) {
        for (size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const size_t workers = std::min<size_t>(threads, n);
    const size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        const size_t lo = begin + w * chunk;
        const size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace zgame

#endif  // ZGAME_PARALLEL_HPP

#ifndef RTK_PARALLEL_HPP
#define RTK_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rtk {

// Number of workers to use; 0 resolves to hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(block_index, begin, end) over [0, n) split into fixed-size blocks.
// Block boundaries depend only on (n, block_size), never on the worker count,
// so any per-block outputs can be reduced in block order to give results that
// are bit-identical for every --threads value.
inline void parallel_blocks(std::size_t n, std::size_t block_size, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    threads = resolve_threads(threads);
    if (threads <= 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b)
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        }
    };
    std::vector<std::thread> pool;
    unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, n_blocks));
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Deterministic parallel reduction: fn fills out[b] for each block, the
// caller combines out in index order.
template <typename T>
std::vector<T> parallel_block_map(std::size_t n, std::size_t block_size, unsigned threads,
                                  const std::function<T(std::size_t, std::size_t, std::size_t)>& fn) {
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
    std::vector<T> out(n_blocks);
    parallel_blocks(n, block_size, threads,
                    [&](std::size_t b, std::size_t lo, std::size_t hi) { out[b] = fn(b, lo, hi); });
    return out;
}

} // namespace rtk

#endif

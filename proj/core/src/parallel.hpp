#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace selcon::detail {

/// Splits [0, count) into `workers` contiguous chunks and runs fn(begin, end, chunk)
/// on each, chunk 0 on the calling thread. Chunk boundaries depend only on count
/// and workers, so per-chunk results can be reduced in chunk order.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
    if (chunks == 1) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    auto bounds = [&](std::size_t c) { return count * c / chunks; };
    std::vector<std::thread> threads;
    threads.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
        threads.emplace_back([&, c] { fn(bounds(c), bounds(c + 1), c); });
    }
    fn(bounds(0), bounds(1), std::size_t{0});
    for (auto& t : threads) {
        t.join();
    }
}

} // namespace selcon::detail

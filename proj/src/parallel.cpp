#include "clifft/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace clifft {

namespace {

constexpr std::size_t kChunk = 4096;

int g_thread_count = 0; // 0 = unresolved

int resolve_default() {
    if (const char* env = std::getenv("CLIFFT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    return 1;
}

} // namespace

int thread_count() {
    if (g_thread_count == 0)
        g_thread_count = resolve_default();
    return g_thread_count;
}

void set_thread_count(int n) {
    g_thread_count = std::max(1, n);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0)
        return;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), chunks);
    if (workers <= 1) {
        // Same chunk decomposition as the threaded path so callers that
        // reduce per chunk see identical boundaries.
        for (std::size_t c = 0; c < chunks; ++c)
            fn(c * kChunk, std::min((c + 1) * kChunk, n));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            const std::size_t begin = c * kChunk;
            const std::size_t end = std::min(begin + kChunk, n);
            fn(begin, end);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
}

double deterministic_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    if (n == 0)
        return 0.0;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        // parallel_for chunking matches kChunk, so [begin, end) is one block.
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i)
            s += term(i);
        partial[begin / kChunk] = s;
    });
    double total = 0.0;
    for (double p : partial)
        total += p;
    return total;
}

} // namespace clifft

#pragma once

#include <cstddef>
#include <functional>

namespace clifft {

/// Worker-thread count used by parallel loops. Resolution order: explicit
/// set_thread_count() > CLIFFT_THREADS env var > 1. Results never depend on
/// this value: work is split into fixed-size chunks and reductions combine
/// chunk partials in index order, so outputs are bit-identical for any count.
int thread_count();
void set_thread_count(int n);

/// Runs fn(begin, end) over [0, n) split into fixed-size chunks. Chunks may
/// execute on any thread; each chunk must write only to its own slice.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

/// Deterministic sum of term(i) for i in [0, n): fixed-size blocks are summed
/// left to right and the block partials are combined in block order.
double deterministic_sum(std::size_t n, const std::function<double(std::size_t)>& term);

} // namespace clifft

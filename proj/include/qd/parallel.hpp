// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#if defined(QD_HAVE_OPENMP)
#include <omp.h>
#endif

namespace qd::par {

// Fixed chunk size so that reductions combine partial results in chunk-index
// order: results are bitwise independent of the number of threads.
inline constexpr std::size_t kChunk = 1024;

inline int max_threads() {
#if defined(QD_HAVE_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void serial_for(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
#if defined(QD_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
#else
    serial_for(n, body);
#endif
}

// Maps chunks [lo,hi) to partial values, then combines them sequentially in
// chunk order.
template <class T, class Map, class Combine>
T serial_reduce(std::size_t n, T init, Map&& map, Combine&& combine) {
    T acc = init;
    for (std::size_t lo = 0; lo < n; lo += kChunk) {
        std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        acc = combine(acc, map(lo, hi));
    }
    return acc;
}

template <class T, class Map, class Combine>
T parallel_reduce(std::size_t n, T init, Map&& map, Combine&& combine) {
    std::size_t nchunks = (n + kChunk - 1) / kChunk;
    if (nchunks <= 1) return serial_reduce(n, init, map, combine);
    std::vector<T> partial(nchunks, init);
#if defined(QD_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        partial[static_cast<std::size_t>(c)] = map(lo, hi);
    }
    T acc = init;
    for (auto& p : partial) acc = combine(acc, p);
    return acc;
}

}  // namespace qd::par

// config.hpp
// Error types, run configuration and the deterministic worker helper shared
// by every module.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace twinsieve {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Requested work exceeds a configured table or memory limit.
class capacity_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Argument outside the operation's mathematical domain.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMinSegmentSize = 4096;
inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

// Covers p_2001^2 = 302'516'449, the largest square used by the default scans.
inline constexpr u64 kDefaultSieveLimit = 310'000'000;

// Knobs for anything that sieves. Results never depend on segment_size or
// workers; sieve_limit caps the interval any linear sieve may cover.
struct SieveConfig {
    std::size_t segment_size = kDefaultSegmentSize;  // candidates per segment
    unsigned workers = 1;
    u64 sieve_limit = kDefaultSieveLimit;

    void validate() const {
        if (segment_size < kMinSegmentSize)
            throw domain_error("segment size must be at least 4096 candidates");
        if (workers < 1) throw domain_error("worker count must be at least 1");
    }

    void require_within_limit(u64 x, const char* what) const {
        if (x > sieve_limit)
            throw capacity_error(std::string(what) + ": " + std::to_string(x) + " exceeds the sieve limit " +
                                 std::to_string(sieve_limit) + " (raise --sieve-limit)");
    }
};

// Runs fn(i) for every i in [0, count) on up to `workers` threads. Each index
// is handled exactly once; callers write results into slot i, so the merged
// output is independent of scheduling. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (count == 0) return;
    const std::size_t nthreads = std::min<std::size_t>(std::max(1u, workers), count);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        for (std::size_t w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += nthreads) fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

// Integer square root, exact for the whole u64 range.
constexpr u64 isqrt(u64 n) {
    if (n < 2) return n;
    u64 r = 0;
    u64 bit = u64{1} << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

}  // namespace twinsieve

// primes.hpp
// Prime generation and counting. A segmented, odd-only sieve of Eratosthenes
// is the ground truth for everything downstream; trial division is kept as an
// independent check. Prime indices are 1-based throughout (p_1 = 2).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twinsieve/config.hpp"
#include "twinsieve/sieve_segment.hpp"

namespace twinsieve {

// Trial division by 2, 3 and 6j +/- 1 up to sqrt(a).
inline bool is_prime_trial(u64 a) {
    if (a < 2) throw domain_error("is_prime_trial: argument must be at least 2");
    if (a < 4) return true;
    if (a % 2 == 0 || a % 3 == 0) return false;
    for (u64 d = 5; d <= a / d; d += 6) {
        if (a % d == 0 || a % (d + 2) == 0) return false;
    }
    return true;
}

// All primes <= limit with a plain byte sieve. Used for sieving primes only.
inline std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<char> composite(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

namespace detail {

// Splits the odd numbers of [lo, hi] into SieveSegments, strikes odd
// composites and hands each finished segment to visit(index, segment).
// Segments are visited in parallel; index gives the deterministic order.
template <typename Visit>
std::size_t sieve_odd_segments(u64 lo, u64 hi, const SieveConfig& cfg, Visit&& visit) {
    cfg.validate();
    u64 first = std::max<u64>(lo, 3);
    if (first % 2 == 0) ++first;
    const u64 last = (hi % 2 == 0) ? hi - 1 : hi;
    if (hi < 3 || first > last) return 0;

    const u64 total = (last - first) / 2 + 1;
    const u64 seg = cfg.segment_size;
    const std::size_t nsegs = static_cast<std::size_t>((total + seg - 1) / seg);
    const std::vector<u64> base = small_primes(isqrt(hi));

    parallel_for(nsegs, cfg.workers, [&](std::size_t s) {
        const u64 begin = first + 2 * (s * seg);
        const auto size = static_cast<std::size_t>(std::min<u64>(seg, total - s * seg));
        SieveSegment segment(begin, 2, size);
        const u64 end = segment.last();
        for (u64 p : base) {
            if (p == 2) continue;
            if (p * p > end) break;
            u64 start = std::max(p * p, (begin + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            segment.clear_progression(start, 2 * p);
        }
        if (begin == 1) segment.clear(0);
        visit(s, segment);
    });
    return nsegs;
}

}  // namespace detail

// Primes in [lo, hi], ascending. Output does not depend on segment size or
// worker count.
inline std::vector<u64> sieve_range(u64 lo, u64 hi, const SieveConfig& cfg = {}) {
    if (lo < 2) throw domain_error("sieve_range: lower bound must be at least 2");
    if (hi < lo) throw domain_error("sieve_range: upper bound below lower bound");

    std::vector<std::vector<u64>> parts;
    const u64 seg = cfg.segment_size;
    const u64 odd_total = hi >= 3 ? (hi + 1) / 2 : 0;
    parts.resize(static_cast<std::size_t>(odd_total / std::max<u64>(seg, 1) + 2));
    const std::size_t used = detail::sieve_odd_segments(lo, hi, cfg, [&](std::size_t s, const SieveSegment& segment) {
        auto& out = parts[s];
        out.reserve(segment.count());
        segment.for_each_set([&](u64 v) { out.push_back(v); });
    });

    std::vector<u64> primes;
    if (lo <= 2) primes.push_back(2);
    std::size_t n = primes.size();
    for (std::size_t s = 0; s < used; ++s) n += parts[s].size();
    primes.reserve(n);
    for (std::size_t s = 0; s < used; ++s) primes.insert(primes.end(), parts[s].begin(), parts[s].end());
    return primes;
}

// Number of primes in [lo, hi] without materialising them.
inline u64 count_primes(u64 lo, u64 hi, const SieveConfig& cfg = {}) {
    if (hi < lo || hi < 2) return 0;
    lo = std::max<u64>(lo, 2);
    std::vector<u64> counts(static_cast<std::size_t>((hi + 1) / 2 / std::max<std::size_t>(cfg.segment_size, 1) + 2), 0);
    const std::size_t used = detail::sieve_odd_segments(lo, hi, cfg, [&](std::size_t s, const SieveSegment& segment) {
        counts[s] = segment.count();
    });
    u64 total = (lo <= 2) ? 1 : 0;
    for (std::size_t s = 0; s < used; ++s) total += counts[s];
    return total;
}

// A twin prime pair (6t - 1, 6t + 1). The pair (3, 5) has no such t and is
// handled separately wherever it matters.
struct TwinPair {
    u64 t;
    u64 lower() const { return 6 * t - 1; }
    u64 upper() const { return 6 * t + 1; }
    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// All t with lo <= 6t - 1 and 6t + 1 <= hi and both members prime.
inline std::vector<TwinPair> twin_pairs_in(u64 lo, u64 hi, const SieveConfig& cfg = {}) {
    if (hi < lo) throw domain_error("twin_pairs_in: upper bound below lower bound");
    std::vector<TwinPair> out;
    const u64 from = std::max<u64>(lo, 5);
    if (hi < 7 || from > hi - 2) return out;
    const auto primes = sieve_range(from, hi, cfg);
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        if (primes[i + 1] - primes[i] == 2) out.push_back(TwinPair{(primes[i] + 1) / 6});
    }
    return out;
}

// How pi_2(m) counts: complete pairs (p, p + 2) with p + 2 <= m, or distinct
// primes p <= m belonging to at least one pair.
enum class TwinConvention { pairs, members };

// Primes up to a fixed limit, with O(log n) pi, pi_2 and p_n queries. Built
// once, then shared read-only.
class PrimeTable {
public:
    explicit PrimeTable(u64 limit, const SieveConfig& cfg = {}) : limit_(limit) {
        cfg.require_within_limit(limit_, "PrimeTable");
        if (limit_ >= 2) primes_ = sieve_range(2, limit_, cfg);
        for (std::size_t i = 0; i + 1 < primes_.size(); ++i) {
            if (primes_[i + 1] - primes_[i] != 2) continue;
            twin_uppers_.push_back(primes_[i + 1]);
            if (members_.empty() || members_.back() != primes_[i]) members_.push_back(primes_[i]);
            members_.push_back(primes_[i + 1]);
        }
    }

    u64 limit() const { return limit_; }
    std::size_t size() const { return primes_.size(); }
    std::span<const u64> primes() const { return primes_; }

    // p_n, 1-based.
    u64 nth_prime(std::size_t n) const {
        if (n == 0) throw domain_error("nth_prime: index is 1-based");
        if (n > primes_.size())
            throw capacity_error("nth_prime: p_" + std::to_string(n) + " lies beyond the sieve limit " +
                                 std::to_string(limit_));
        return primes_[n - 1];
    }

    std::size_t prime_pi(u64 m) const {
        require(m, "prime_pi");
        return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), m) - primes_.begin());
    }

    std::size_t twin_pi(u64 m, TwinConvention convention = TwinConvention::pairs) const {
        if (convention == TwinConvention::pairs) {
            require(m, "twin_pi");
            return static_cast<std::size_t>(std::upper_bound(twin_uppers_.begin(), twin_uppers_.end(), m) -
                                            twin_uppers_.begin());
        }
        // Membership of p needs p + 2 inside the table.
        if (m > 2) require(m + 2, "twin_pi");
        return static_cast<std::size_t>(std::upper_bound(members_.begin(), members_.end(), m) - members_.begin());
    }

    bool is_prime(u64 m) const {
        require(m, "is_prime");
        return std::binary_search(primes_.begin(), primes_.end(), m);
    }

private:
    void require(u64 m, const char* what) const {
        if (m > limit_)
            throw capacity_error(std::string(what) + ": " + std::to_string(m) + " exceeds the sieve limit " +
                                 std::to_string(limit_));
    }

    u64 limit_;
    std::vector<u64> primes_;
    std::vector<u64> twin_uppers_;
    std::vector<u64> members_;
};

// Smallest table holding at least `count` primes.
inline PrimeTable table_with_primes(std::size_t count, const SieveConfig& cfg = {}) {
    u64 limit = 64;
    while (true) {
        PrimeTable t(limit, cfg);
        if (t.size() >= count) return t;
        limit *= 2;
    }
}

}  // namespace twinsieve

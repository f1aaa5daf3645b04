// legendre.hpp
// Inclusion-exclusion residue counts:
//   S(x,n)  integers in [1, x] coprime to p_1..p_n (Legendre's phi)
//   T(x,n)  multiples of p_{n+1} in [1, x] coprime to p_1..p_n
//   R(x,n)  t in [1, x/6) with 6t - 1 and 6t + 1 both free of p_3..p_n
//   Q(x,n)  pairs removed from R(x,n) when p_{n+1} is added
// S and R are each available through two unrelated routes so that one can
// check the other.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twinsieve/config.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/sieve_segment.hpp"

namespace twinsieve {

enum class CountMethod { recursion, direct_sieve, inclusion_exclusion_sum };

inline const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::recursion: return "recursion";
        case CountMethod::direct_sieve: return "direct-sieve";
        case CountMethod::inclusion_exclusion_sum: return "inclusion-exclusion-sum";
    }
    return "?";
}

struct CoprimeCount {
    u64 x;
    std::size_t n;
    u64 value;
    CountMethod method;
};

namespace detail {

inline void require_primes(const PrimeTable& table, std::size_t n, const char* what) {
    if (n > table.size())
        throw capacity_error(std::string(what) + ": needs p_" + std::to_string(n) + " but the prime table holds " +
                             std::to_string(table.size()) + " primes");
}

inline void require_primes_count(std::size_t have, std::size_t n) {
    if (n > have)
        throw capacity_error("phi: needs p_" + std::to_string(n) + " but the prime table holds " +
                             std::to_string(have) + " primes");
}

// Inverse of 6 modulo an odd prime p >= 5.
inline u64 inverse_of_six(u64 p) {
    // 6 * inv = 1 (mod p), found by the extended Euclidean algorithm.
    i64 r0 = static_cast<i64>(p), r1 = 6, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i64 q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    const i64 m = static_cast<i64>(p);
    return static_cast<u64>(((s0 % m) + m) % m);
}

}  // namespace detail

// Legendre's phi by the recurrence
//   phi(y, b) = phi(y, c) - sum_{c < i <= b} phi(y / p_i, i - 1)
// with a primorial wheel for b <= 6, phi(y, b) = 1 once y < p_{b+1}, and a
// bounded memo on (y, b). Not thread-safe; use one instance per worker.
class PhiCalculator {
public:
    static constexpr std::size_t kWheelPrimes = 6;

    explicit PhiCalculator(const PrimeTable& table, std::size_t cache_cap = std::size_t{1} << 22)
        : primes_(table.primes()),
          cache_cap_(cache_cap),
          wheel_count_(std::min(kWheelPrimes, primes_.size())) {}

    u64 operator()(u64 x, std::size_t n) {
        detail::require_primes_count(primes_.size(), n);
        return phi(x, n);
    }

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct Wheel {
        u64 period;
        std::vector<std::uint32_t> prefix;  // prefix[r] = #{1 <= y <= r coprime}
    };

    // Wheels for b = 1..6; the first six primes never change, so they are
    // built once per process.
    static const std::vector<Wheel>& wheels() {
        static const std::vector<Wheel> built = [] {
            constexpr std::array<u64, kWheelPrimes> small{2, 3, 5, 7, 11, 13};
            std::vector<Wheel> out;
            u64 period = 1;
            for (std::size_t b = 1; b <= kWheelPrimes; ++b) {
                period *= small[b - 1];
                std::vector<std::uint32_t> prefix(period + 1, 0);
                for (u64 y = 1; y <= period; ++y) {
                    bool coprime = true;
                    for (std::size_t s = 0; s < b && coprime; ++s) coprime = (y % small[s]) != 0;
                    prefix[y] = prefix[y - 1] + (coprime ? 1 : 0);
                }
                out.push_back(Wheel{period, std::move(prefix)});
            }
            return out;
        }();
        return built;
    }

    static u64 wheel(u64 y, std::size_t b) {
        const Wheel& w = wheels()[b - 1];
        return (y / w.period) * w.prefix[w.period] + w.prefix[y % w.period];
    }

    u64 phi(u64 y, std::size_t b) {
        if (b == 0 || y == 0) return y;
        if (b <= wheel_count_) return wheel(y, b);
        if (b < primes_.size() && y < primes_[b]) return 1;

        const bool cacheable = y < (u64{1} << 44) && b < (std::size_t{1} << 20);
        const u64 key = (y << 20) | b;
        if (cacheable) {
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }

        const std::size_t c = wheel_count_;
        u64 result = c == 0 ? y : wheel(y, c);
        for (std::size_t i = c + 1; i <= b; ++i) {
            const u64 p = primes_[i - 1];
            if (p > y) break;
            const u64 z = y / p;
            if (z < p) {
                // Every remaining p_i <= y contributes phi(z, i - 1) = 1.
                const auto hi = std::upper_bound(primes_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                 primes_.begin() + static_cast<std::ptrdiff_t>(b), y);
                result -= static_cast<u64>(hi - (primes_.begin() + static_cast<std::ptrdiff_t>(i - 1)));
                break;
            }
            result -= phi(z, i - 1);
        }

        if (cacheable) {
            if (cache_.size() >= cache_cap_) cache_.clear();
            cache_.emplace(key, result);
        }
        return result;
    }

    std::span<const u64> primes_;
    std::size_t cache_cap_;
    std::size_t wheel_count_;
    std::unordered_map<u64, u64> cache_;
};

inline u64 phi_recursion(u64 x, std::size_t n, const PrimeTable& table) {
    PhiCalculator calc(table);
    return calc(x, n);
}

// S(x,n) by striking multiples of p_1..p_n from an odd-only bit window over
// [1, x] and counting survivors.
inline u64 phi_direct(u64 x, std::size_t n, const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::require_primes(table, n, "phi_direct");
    cfg.validate();
    if (n == 0 || x == 0) return x;
    cfg.require_within_limit(x, "phi_direct");

    const auto primes = table.primes();
    const u64 total = (x + 1) / 2;  // odd values 1, 3, ..., <= x
    const u64 seg = cfg.segment_size;
    const auto nsegs = static_cast<std::size_t>((total + seg - 1) / seg);
    std::vector<u64> counts(nsegs, 0);
    parallel_for(nsegs, cfg.workers, [&](std::size_t s) {
        const u64 begin = 1 + 2 * (s * seg);
        SieveSegment segment(begin, 2, static_cast<std::size_t>(std::min<u64>(seg, total - s * seg)));
        const u64 end = segment.last();
        for (std::size_t i = 1; i < n; ++i) {
            const u64 p = primes[i];
            if (p > end) break;
            u64 start = (begin + p - 1) / p * p;
            if (start % 2 == 0) start += p;
            segment.clear_progression(start, 2 * p);
        }
        counts[s] = segment.count();
    });
    u64 total_count = 0;
    for (u64 c : counts) total_count += c;
    return total_count;
}

inline constexpr std::size_t kMaxInclusionExclusionPrimes = 12;

// The literal 2^n-term inclusion-exclusion sum for S(x,n).
inline u64 phi_inclusion_exclusion(u64 x, std::size_t n, const PrimeTable& table) {
    if (n > kMaxInclusionExclusionPrimes)
        throw domain_error("phi_inclusion_exclusion: n = " + std::to_string(n) +
                           " would need more than 4096 terms (limit n <= 12)");
    detail::require_primes(table, n, "phi_inclusion_exclusion");
    const auto primes = table.primes();
    i64 sum = 0;
    for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
        u64 d = 1;
        int bits = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (mask >> s & 1) {
                d *= primes[s];
                ++bits;
            }
        }
        const auto term = static_cast<i64>(x / d);
        sum += (bits % 2 == 0) ? term : -term;
    }
    return static_cast<u64>(sum);
}

// T(x,n) = S(floor(x / p_{n+1}), n).
inline u64 t_count(u64 x, std::size_t n, const PrimeTable& table) {
    detail::require_primes(table, n + 1, "t_count");
    return phi_recursion(x / table.nth_prime(n + 1), n, table);
}

namespace detail {

inline void require_twin_args(u64 x, std::size_t n, const PrimeTable& table, const char* what) {
    if (x % 6 != 0) throw domain_error(std::string(what) + ": x = " + std::to_string(x) + " is not a multiple of 6");
    if (n < 2) throw domain_error(std::string(what) + ": n must be at least 2");
    require_primes(table, n, what);
}

}  // namespace detail

// |R(x,n)| by striking, for each p_s (3 <= s <= n), the two classes of t with
// 6t = +1 or -1 (mod p_s) from a bit window over t in [1, x/6).
inline u64 twin_residue_count(u64 x, std::size_t n, const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::require_twin_args(x, n, table, "twin_residue_count");
    cfg.validate();
    cfg.require_within_limit(x, "twin_residue_count");
    const u64 k = x / 6;
    if (k <= 1) return 0;

    // Primes above 6(k-1)+1 divide no candidate.
    const u64 top = 6 * (k - 1) + 1;
    std::vector<std::array<u64, 3>> classes;  // {p, t = 1/6, t = -1/6}
    for (std::size_t s = 3; s <= n; ++s) {
        const u64 p = table.nth_prime(s);
        if (p > top) break;
        const u64 inv = detail::inverse_of_six(p);
        classes.push_back({p, inv, p - inv});
    }

    const u64 total = k - 1;  // t = 1 .. k-1
    const u64 seg = cfg.segment_size;
    const auto nsegs = static_cast<std::size_t>((total + seg - 1) / seg);
    std::vector<u64> counts(nsegs, 0);
    parallel_for(nsegs, cfg.workers, [&](std::size_t s) {
        SieveSegment segment(1 + s * seg, 1, static_cast<std::size_t>(std::min<u64>(seg, total - s * seg)));
        for (const auto& [p, c1, c2] : classes) {
            segment.clear_residue_class(c1, p);
            segment.clear_residue_class(c2, p);
        }
        counts[s] = segment.count();
    });
    u64 result = 0;
    for (u64 c : counts) result += c;
    return result;
}

// |R(x,n)| by a second route: strike multiples of p_3..p_n from the odd
// integers up to x, then count t whose 6t - 1 and 6t + 1 both survive.
inline u64 twin_residue_count_integer_sieve(u64 x, std::size_t n, const PrimeTable& table,
                                            const SieveConfig& cfg = {}) {
    detail::require_twin_args(x, n, table, "twin_residue_count_integer_sieve");
    cfg.validate();
    cfg.require_within_limit(x, "twin_residue_count_integer_sieve");
    const u64 k = x / 6;
    if (k <= 1) return 0;

    const u64 total = k - 1;
    const u64 tseg = std::max<u64>(cfg.segment_size / 3, 1);
    const auto nsegs = static_cast<std::size_t>((total + tseg - 1) / tseg);
    std::vector<u64> counts(nsegs, 0);
    parallel_for(nsegs, cfg.workers, [&](std::size_t s) {
        const u64 ta = 1 + s * tseg;
        const u64 tcount = std::min<u64>(tseg, total - s * tseg);
        const u64 begin = 6 * ta - 1;
        // Odd values 6ta - 1 .. 6(ta + tcount - 1) + 1.
        SieveSegment segment(begin, 2, static_cast<std::size_t>(3 * tcount - 1));
        const u64 end = segment.last();
        for (std::size_t i = 3; i <= n; ++i) {
            const u64 p = table.nth_prime(i);
            if (p > end) break;
            u64 start = (begin + p - 1) / p * p;
            if (start % 2 == 0) start += p;
            segment.clear_progression(start, 2 * p);
        }
        u64 c = 0;
        for (u64 j = 0; j < tcount; ++j) {
            if (segment.test(static_cast<std::size_t>(3 * j)) && segment.test(static_cast<std::size_t>(3 * j + 1))) ++c;
        }
        counts[s] = c;
    });
    u64 result = 0;
    for (u64 c : counts) result += c;
    return result;
}

// Q(x,n) = |R(x,n)| - |R(x,n+1)|.
inline u64 q_count(u64 x, std::size_t n, const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::require_twin_args(x, n + 1, table, "q_count");
    return twin_residue_count(x, n, table, cfg) - twin_residue_count(x, n + 1, table, cfg);
}

// Both sides of the sieve restricted to 1, 5, 7, 11, ..., 6k - 1:
//   sequence_count  survivors of the sequence after striking p_3..p_n
//   formula_value   x/3 - sum_{r=3..n} ( [x/p_r] + sum_J (-1)^|J| [x / (p_r prod_J p_s)] ),
//                   J ranging over subsets of {1..r-1}
struct RestrictedIdentity {
    u64 x;
    std::size_t n;
    u64 sequence_count;
    i64 formula_value;
    bool holds;
};

inline RestrictedIdentity restricted_identity_check(u64 x, std::size_t n, const PrimeTable& table,
                                                    const SieveConfig& cfg = {}) {
    detail::require_twin_args(x, n, table, "restricted_identity_check");
    cfg.require_within_limit(x, "restricted_identity_check");
    const u64 k = x / 6;
    const auto primes = table.primes();

    // Left: members 6t - 1 (t = 1..k) and 6t + 1 (t = 0..k-1), struck by class.
    u64 sequence_count = 0;
    if (k > 0) {
        SieveSegment minus(1, 1, static_cast<std::size_t>(k));  // 6t - 1, t = 1..k
        SieveSegment plus(0, 1, static_cast<std::size_t>(k));   // 6t + 1, t = 0..k-1
        for (std::size_t s = 3; s <= n; ++s) {
            const u64 p = primes[s - 1];
            const u64 inv = detail::inverse_of_six(p);
            minus.clear_residue_class(inv, p);
            plus.clear_residue_class(p - inv, p);
        }
        sequence_count = minus.count() + plus.count();
    }

    // Right: the displayed formula, term by term.
    i64 formula = static_cast<i64>(x / 3);
    PhiCalculator calc(table);
    for (std::size_t r = 3; r <= n; ++r) {
        const u64 pr = primes[r - 1];
        i64 inner = 0;
        if (r - 1 <= kMaxInclusionExclusionPrimes) {
            for (u64 mask = 0; mask < (u64{1} << (r - 1)); ++mask) {
                u64 d = pr;
                int bits = 0;
                for (std::size_t s = 0; s + 1 < r; ++s) {
                    if (mask >> s & 1) {
                        d *= primes[s];
                        ++bits;
                    }
                }
                const auto term = static_cast<i64>(x / d);
                inner += (bits % 2 == 0) ? term : -term;
            }
        } else {
            inner = static_cast<i64>(calc(x / pr, r - 1));
        }
        formula -= inner;
    }
    return RestrictedIdentity{x, n, sequence_count, formula, formula == static_cast<i64>(sequence_count)};
}

inline constexpr u64 kMaxMaterialized = 1'000'000;

// The explicit set of y in [1, x] coprime to p_1..p_n.
inline std::vector<u64> coprime_residue_set(u64 x, std::size_t n, const PrimeTable& table) {
    if (x > kMaxMaterialized)
        throw capacity_error("coprime_residue_set: x = " + std::to_string(x) + " is above the 10^6 materialization cap");
    detail::require_primes(table, n, "coprime_residue_set");
    std::vector<u64> out;
    if (x == 0) return out;
    SieveSegment segment(1, 1, static_cast<std::size_t>(x));
    for (std::size_t s = 1; s <= n; ++s) {
        const u64 p = table.nth_prime(s);
        segment.clear_progression(p, p);
    }
    out.reserve(segment.count());
    segment.for_each_set([&](u64 v) { out.push_back(v); });
    return out;
}

// Integers below `limit` whose least prime factor is p_s, i.e. p_s times 1 or
// a product of primes >= p_s.
struct SiftedMultiplesView {
    std::size_t s;
    u64 limit;
    std::vector<u64> members;
};

inline SiftedMultiplesView sifted_multiples(std::size_t s, u64 limit, const PrimeTable& table) {
    if (s == 0) throw domain_error("sifted_multiples: prime index is 1-based");
    if (limit > 10 * kMaxMaterialized)
        throw capacity_error("sifted_multiples: limit " + std::to_string(limit) + " is above the 10^7 cap");
    detail::require_primes(table, s, "sifted_multiples");
    const auto primes = table.primes();
    const u64 ps = primes[s - 1];
    SiftedMultiplesView view{s, limit, {}};
    for (u64 q = 1; limit > 0 && ps * q < limit; ++q) {
        bool smaller_factor = false;
        for (std::size_t i = 0; i + 1 < s && !smaller_factor; ++i) smaller_factor = q % primes[i] == 0;
        if (!smaller_factor) view.members.push_back(ps * q);
    }
    return view;
}

// |union of sifted multiples of p_1..p_n below limit|, counted by striking.
inline u64 sifted_union_size(std::size_t n, u64 limit, const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::require_primes(table, n, "sifted_union_size");
    cfg.require_within_limit(limit, "sifted_union_size");
    if (limit <= 2) return 0;
    SieveSegment segment(2, 1, static_cast<std::size_t>(limit - 2));  // 2 .. limit-1
    for (std::size_t s = 1; s <= n; ++s) {
        const u64 p = table.nth_prime(s);
        segment.clear_progression(p, p);
    }
    return (limit - 2) - segment.count();
}

}  // namespace twinsieve

// conjecture.hpp
// Scans every inequality and equivalence asserted about pi, pi_2, S and R
// over a finite range and records the outcome per index. Verdicts use exact
// integer arithmetic only.
//
// Claim identifiers:
//   the1      [p_{n+1}^2 / (n+1)] <= pi(p_{n+1}^2)
//   th3       x / (n+1) <= S(x,n) for x >= p_{n+1}^2
//   th4       x / (2(n+1)) <= |R(x,n)| for x = 6k >= p_{n+1}^2 - 1 (asserted for n >= 70)
//   maint32   b p_{n+1}^2 / (n+1) < pi(p_{n+1}^2) from some N(b) on
//   maint33   [a p_{n+1}^2 / (2(n+1))] <= pi_2(p_{n+1}^2) from some N_2(a) on
//   maint133  [p_{n+3}^2 / (3(n+2))] <= pi_2(p_{n+3}^2) for n >= 2
//   l03       the sifted-union criterion equivalent to p_{n+1}^2 / (n+1) < pi(p_{n+1}^2)
//   maint31   the composite-witness criterion equivalent to the a = 1 twin bound
//   catalan   C(2n,n)/(n+1) = C(2n,n) - C(2n,n+1) = C(2n,n) - sum_i C(2n-i,n)

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twinsieve/config.hpp"
#include "twinsieve/exact_ratio.hpp"
#include "twinsieve/legendre.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

enum class Outcome { pass, fail, out_of_domain };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::out_of_domain: return "out-of-domain";
    }
    return "?";
}

// CONFIRMED / CONTRADICTED apply to claims asserted over the scanned range;
// DISCREPANCY marks a threshold that differs from the published one;
// INFORMATIONAL marks scans outside the asserted range.
enum class Verdict { confirmed, contradicted, discrepancy, informational };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "CONFIRMED";
        case Verdict::contradicted: return "CONTRADICTED";
        case Verdict::discrepancy: return "DISCREPANCY";
        case Verdict::informational: return "INFORMATIONAL";
    }
    return "?";
}

struct PointOutcome {
    u64 index;
    ExactRatio lhs;
    ExactRatio rhs;
    Outcome outcome;
};

struct VerificationReport {
    std::string claim;
    u64 lo = 0;
    u64 hi = 0;
    std::vector<PointOutcome> outcomes;
    std::optional<u64> first_failure;
    std::optional<u64> threshold_found;
    std::optional<u64> expected_threshold;
    Verdict verdict = Verdict::confirmed;
    double wall_seconds = 0;  // never serialized to stdout

    bool all_pass() const { return !first_failure; }
};

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Fills first_failure, threshold_found and the verdict from the outcomes.
// `asserted` says whether the claim is supposed to hold on every point.
inline void finalize(VerificationReport& r, bool asserted, bool want_threshold) {
    for (const auto& p : r.outcomes) {
        if (p.outcome == Outcome::fail) {
            r.first_failure = p.index;
            break;
        }
    }
    if (want_threshold) {
        for (auto it = r.outcomes.rbegin(); it != r.outcomes.rend() && it->outcome == Outcome::pass; ++it)
            r.threshold_found = it->index;
    }
    if (r.expected_threshold) {
        r.verdict = r.threshold_found == r.expected_threshold ? Verdict::confirmed : Verdict::discrepancy;
        // A failure at or beyond the published threshold contradicts the claim outright.
        for (const auto& p : r.outcomes)
            if (p.outcome == Outcome::fail && p.index >= *r.expected_threshold) r.verdict = Verdict::contradicted;
    } else if (!asserted) {
        r.verdict = Verdict::informational;
    } else {
        r.verdict = r.first_failure ? Verdict::contradicted : Verdict::confirmed;
    }
}

inline VerificationReport new_report(std::string claim, u64 lo, u64 hi) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.lo = lo;
    r.hi = hi;
    return r;
}

inline u64 square_of_prime(const PrimeTable& table, std::size_t index) {
    const u64 p = table.nth_prime(index);
    return p * p;
}

inline void require_square(const PrimeTable& table, std::size_t index, const char* what) {
    detail::require_primes(table, index, what);
    const u64 x = square_of_prime(table, index);
    if (x > table.limit())
        throw capacity_error(std::string(what) + ": p_" + std::to_string(index) + "^2 = " + std::to_string(x) +
                             " exceeds the prime table limit " + std::to_string(table.limit()));
}

inline Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

}  // namespace detail

// the1: [X / (n+1)] <= pi(X), X = p_{n+1}^2, for n in [n_lo, n_hi].
inline VerificationReport verify_prime_square_bound(std::size_t n_lo, std::size_t n_hi, const PrimeTable& table) {
    detail::Stopwatch clock;
    if (n_lo < 1) throw domain_error("the1: n starts at 1");
    detail::require_square(table, n_hi + 1, "the1");
    VerificationReport r = detail::new_report("the1", n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const u64 x = detail::square_of_prime(table, n + 1);
        const u64 lhs = x / (n + 1);
        const u64 rhs = table.prime_pi(x);
        r.outcomes.push_back({n, lhs, rhs, detail::outcome_of(lhs <= rhs)});
    }
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

// th3: x / (n+1) <= S(x,n) at each sample x >= p_{n+1}^2.
inline VerificationReport verify_coprime_density(std::size_t n, const std::vector<u64>& samples,
                                                 const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::Stopwatch clock;
    if (n < 2) throw domain_error("th3: n must be at least 2");
    detail::require_primes(table, n + 1, "th3");
    const u64 p = table.nth_prime(n + 1);
    VerificationReport r = detail::new_report("th3", n, n);
    r.outcomes.resize(samples.size());
    parallel_for(samples.size(), cfg.workers, [&](std::size_t i) {
        const u64 x = samples[i];
        const u64 s = phi_recursion(x, n, table);
        const bool in_domain = x >= p * p;
        const bool ok = BigInt(x) <= BigInt(n + 1) * s;
        r.outcomes[i] = {x, ExactRatio(BigInt(x), BigInt(n + 1)), s,
                         in_domain ? detail::outcome_of(ok) : Outcome::out_of_domain};
    });
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

// th4: x / (2(n+1)) <= |R(x,n)| at each sample x = 6k >= p_{n+1}^2 - 1.
// Only asserted for n >= 70; smaller n is scanned as information.
inline VerificationReport verify_twin_residue_density(std::size_t n, const std::vector<u64>& samples,
                                                      const PrimeTable& table, const SieveConfig& cfg = {}) {
    detail::Stopwatch clock;
    if (n < 3) throw domain_error("th4: n must be at least 3");
    detail::require_primes(table, n + 1, "th4");
    for (u64 x : samples)
        if (x % 6 != 0) throw domain_error("th4: sample " + std::to_string(x) + " is not a multiple of 6");
    const u64 p = table.nth_prime(n + 1);
    VerificationReport r = detail::new_report("th4", n, n);
    r.outcomes.resize(samples.size());
    SieveConfig inner = cfg;
    inner.workers = 1;
    parallel_for(samples.size(), cfg.workers, [&](std::size_t i) {
        const u64 x = samples[i];
        const u64 count = twin_residue_count(x, n, table, inner);
        const bool in_domain = x + 1 >= p * p;
        const bool ok = BigInt(x) <= BigInt(2 * (n + 1)) * count;
        r.outcomes[i] = {x, ExactRatio(BigInt(x), BigInt(2 * (n + 1))), count,
                         in_domain ? detail::outcome_of(ok) : Outcome::out_of_domain};
    });
    detail::finalize(r, n >= 70, false);
    r.wall_seconds = clock.seconds();
    return r;
}

// Published N(b) values.
inline std::optional<u64> published_prime_threshold(u64 b) {
    switch (b) {
        case 2: return 12;
        case 3: return 23;
        case 4: return 35;
        default: return std::nullopt;
    }
}

// maint32: b X < (n+1) pi(X), X = p_{n+1}^2, over n in [n_lo, scan_hi];
// threshold_found is the least n_0 from which every scanned n passes.
inline VerificationReport find_threshold(u64 b, std::size_t n_lo, std::size_t scan_hi, const PrimeTable& table) {
    detail::Stopwatch clock;
    if (b < 1) throw domain_error("maint32: b must be at least 1");
    if (n_lo < 3) throw domain_error("maint32: n starts at 3");
    detail::require_square(table, scan_hi + 1, "maint32");
    VerificationReport r = detail::new_report("maint32", n_lo, scan_hi);
    r.expected_threshold = published_prime_threshold(b);
    for (std::size_t n = n_lo; n <= scan_hi; ++n) {
        const u64 x = detail::square_of_prime(table, n + 1);
        const u64 pi = table.prime_pi(x);
        const bool ok = BigInt(b) * x < BigInt(n + 1) * pi;
        r.outcomes.push_back({n, ExactRatio(BigInt(b) * x, BigInt(n + 1)), pi, detail::outcome_of(ok)});
    }
    detail::finalize(r, false, true);
    if (!r.expected_threshold) r.verdict = Verdict::informational;
    r.wall_seconds = clock.seconds();
    return r;
}

inline constexpr u64 kPublishedTwinThreshold = 20;  // N_2(1)

// maint33: [a X / (2(n+1))] <= pi_2(X), X = p_{n+1}^2, over n in [n_lo, n_hi].
inline VerificationReport verify_main(u64 a, std::size_t n_lo, std::size_t n_hi, const PrimeTable& table,
                                      TwinConvention convention = TwinConvention::pairs) {
    detail::Stopwatch clock;
    if (a < 1) throw domain_error("maint33: a must be at least 1");
    if (n_lo < 3) throw domain_error("maint33: n starts at 3");
    detail::require_square(table, n_hi + 1, "maint33");
    VerificationReport r = detail::new_report("maint33", n_lo, n_hi);
    if (a == 1) r.expected_threshold = kPublishedTwinThreshold;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const u64 x = detail::square_of_prime(table, n + 1);
        const BigInt scaled = BigInt(a) * x / (2 * (n + 1));
        const auto lhs = scaled.convert_to<u64>();
        const u64 rhs = table.twin_pi(x, convention);
        r.outcomes.push_back({n, lhs, rhs, detail::outcome_of(lhs <= rhs)});
    }
    detail::finalize(r, false, true);
    if (!r.expected_threshold) r.verdict = Verdict::informational;
    r.wall_seconds = clock.seconds();
    return r;
}

// maint133: [X / (3(n+2))] <= pi_2(X), X = p_{n+3}^2, for n >= 2.
inline VerificationReport verify_shifted_twin_bound(std::size_t n_lo, std::size_t n_hi, const PrimeTable& table) {
    detail::Stopwatch clock;
    detail::require_square(table, n_hi + 3, "maint133");
    VerificationReport r = detail::new_report("maint133", n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const u64 x = detail::square_of_prime(table, n + 3);
        const u64 lhs = x / (3 * (n + 2));
        const u64 rhs = table.twin_pi(x);
        r.outcomes.push_back({n, lhs, rhs, n < 2 ? Outcome::out_of_domain : detail::outcome_of(lhs <= rhs)});
    }
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

// l03 at one n: X = p_{n+1}^2, U = union of the sifted multiples of
// p_1..p_n below X.
//   left   X / (n+1) < pi(X)
//   right  |U| < n X / (n+1) + 2
struct UnionEquivalence {
    std::size_t n;
    u64 x;
    u64 pi;
    u64 union_size;
    bool lhs_holds;
    bool rhs_holds;
    bool agree;
    // 1, U, the primes in (p_n, X) and X itself partition [1, X]:
    // pi(X) = X - 2 - |U| + n.
    bool partition_holds;
};

inline constexpr u64 kMaxUnionSquare = 100'000'000;

inline UnionEquivalence check_union_equivalence(std::size_t n, const PrimeTable& table, const SieveConfig& cfg = {}) {
    if (n < 2) throw domain_error("l03: n must be at least 2");
    detail::require_square(table, n + 1, "l03");
    const u64 x = detail::square_of_prime(table, n + 1);
    if (x > kMaxUnionSquare) throw capacity_error("l03: p_{n+1}^2 above 10^8");
    const u64 pi = table.prime_pi(x);
    const u64 u = sifted_union_size(n, x, table, cfg);
    const bool lhs = x < BigInt(n + 1) * pi;
    // (n+1)|U| < n X + 2(n+1)
    const bool rhs = BigInt(n + 1) * u < BigInt(n) * x + 2 * (n + 1);
    return UnionEquivalence{n, x, pi, u, lhs, rhs, lhs == rhs, pi + 2 + u == x + n};
}

// maint31 at one n: X = p_{n+1}^2, k = (X - 1)/6, W = {t in [1, k) : 6t - 1
// or 6t + 1 is composite}.
//   left         X / (2(n+1)) < pi_2(X)
//   right        |W| < (n-2) X / (6(n+1)) - 1/6   (constant as the algebra gives it)
//   printed_rhs  |W| < (n-2) X / (6(n+1)) + 1/6   (constant as published)
struct WitnessEquivalence {
    std::size_t n;
    u64 x;
    u64 twin_pi;
    u64 witness_count;
    bool lhs_holds;
    bool rhs_holds;
    bool printed_rhs_holds;
    bool agree;
    bool printed_agree;
};

inline WitnessEquivalence check_witness_equivalence(std::size_t n, const PrimeTable& table) {
    if (n < 3) throw domain_error("maint31: n must be at least 3");
    detail::require_square(table, n + 1, "maint31");
    const u64 x = detail::square_of_prime(table, n + 1);
    const u64 k = (x - 1) / 6;
    u64 witnesses = 0;
    for (u64 t = 1; t < k; ++t) {
        if (!table.is_prime(6 * t - 1) || !table.is_prime(6 * t + 1)) ++witnesses;
    }
    const u64 twins = table.twin_pi(x);
    const bool lhs = x < BigInt(2 * (n + 1)) * twins;
    // 6(n+1)|W| < (n-2) X -/+ (n+1)
    const BigInt scaled = BigInt(6 * (n + 1)) * witnesses;
    const BigInt bound = BigInt(n - 2) * x;
    const bool rhs = scaled < bound - (n + 1);
    const bool printed = scaled < bound + (n + 1);
    return WitnessEquivalence{n, x, twins, witnesses, lhs, rhs, printed, lhs == rhs, lhs == printed};
}

struct CatalanCheck {
    std::size_t n;
    u64 catalan;          // C(2n,n) / (n+1)
    u64 difference_form;  // C(2n,n) - C(2n,n+1)
    u64 sum_form;         // C(2n,n) - sum_{i=1..n} C(2n-i,n)
    bool holds;
};

inline constexpr std::size_t kMaxCatalanN = 30;

// Exact binomial; every intermediate fits in 128 bits for the sizes used.
inline u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (u64 i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return static_cast<u64>(c);
}

inline CatalanCheck catalan_identity_check(std::size_t n) {
    if (n < 1) throw domain_error("catalan: n must be at least 1");
    if (n > kMaxCatalanN) throw capacity_error("catalan: n above 30 overflows 64-bit binomials");
    const u64 central = binomial(2 * n, n);
    const bool divisible = central % (n + 1) == 0;
    const u64 catalan = central / (n + 1);
    const u64 diff = central - binomial(2 * n, n + 1);
    u64 sum = 0;
    for (u64 i = 1; i <= n; ++i) sum += binomial(2 * n - i, n);
    const u64 sum_form = central - sum;
    return CatalanCheck{n, catalan, diff, sum_form, divisible && catalan == diff && diff == sum_form};
}

// Range scans of the three equivalence checks as reports. For l03 and
// maint31 lhs/rhs carry the counted set size and its bound; outcome is
// whether the two sides of the equivalence agree.
inline VerificationReport scan_union_equivalence(std::size_t n_lo, std::size_t n_hi, const PrimeTable& table,
                                                 const SieveConfig& cfg = {}) {
    detail::Stopwatch clock;
    VerificationReport r = detail::new_report("l03", n_lo, n_hi);
    r.outcomes.resize(n_hi >= n_lo ? n_hi - n_lo + 1 : 0);
    SieveConfig inner = cfg;
    inner.workers = 1;
    parallel_for(r.outcomes.size(), cfg.workers, [&](std::size_t i) {
        const std::size_t n = n_lo + i;
        const auto e = check_union_equivalence(n, table, inner);
        r.outcomes[i] = {n, e.union_size, ExactRatio(BigInt(n) * e.x, BigInt(n + 1)) + ExactRatio(2),
                         detail::outcome_of(e.agree && e.partition_holds)};
    });
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

inline VerificationReport scan_witness_equivalence(std::size_t n_lo, std::size_t n_hi, const PrimeTable& table,
                                                   const SieveConfig& cfg = {}) {
    detail::Stopwatch clock;
    VerificationReport r = detail::new_report("maint31", n_lo, n_hi);
    r.outcomes.resize(n_hi >= n_lo ? n_hi - n_lo + 1 : 0);
    parallel_for(r.outcomes.size(), cfg.workers, [&](std::size_t i) {
        const std::size_t n = n_lo + i;
        const auto e = check_witness_equivalence(n, table);
        const ExactRatio bound = ExactRatio(BigInt(n - 2) * e.x, BigInt(6 * (n + 1))) - ExactRatio(BigInt(1), BigInt(6));
        r.outcomes[i] = {n, e.witness_count, bound, detail::outcome_of(e.agree)};
    });
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

inline VerificationReport scan_catalan(std::size_t n_lo, std::size_t n_hi) {
    detail::Stopwatch clock;
    VerificationReport r = detail::new_report("catalan", n_lo, n_hi);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const auto c = catalan_identity_check(n);
        r.outcomes.push_back({n, c.catalan, c.sum_form, detail::outcome_of(c.holds)});
    }
    detail::finalize(r, true, false);
    r.wall_seconds = clock.seconds();
    return r;
}

// Largest n with p_{n+1}^2 <= limit (offset 1) or p_{n+3}^2 <= limit (offset 3).
inline std::size_t largest_index_with_square_below(u64 limit, std::size_t offset) {
    const PrimeTable small(isqrt(limit));
    return small.size() >= offset ? small.size() - offset : 0;
}

}  // namespace twinsieve

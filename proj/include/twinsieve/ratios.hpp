// ratios.hpp
// Density ratios of the sieve residues against the comparison sieve:
//   a_n(x)    = (n + 1) S(x,n) / x
//   a_2(n,x)  = 2 (n + 1) |R(x,n)| / x
// their exact values at the primorial, the K(x,n) term, and recomputation of
// the two published n = 70 tables.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twinsieve/config.hpp"
#include "twinsieve/exact_ratio.hpp"
#include "twinsieve/legendre.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// (n + 1) S(x,n) / x, with S from the Legendre recursion or a direct sieve.
inline ExactRatio ratio_a(u64 x, std::size_t n, const PrimeTable& table,
                          CountMethod method = CountMethod::recursion, const SieveConfig& cfg = {}) {
    if (x == 0) throw domain_error("ratio_a: x must be positive");
    u64 s = 0;
    switch (method) {
        case CountMethod::recursion: s = phi_recursion(x, n, table); break;
        case CountMethod::direct_sieve: s = phi_direct(x, n, table, cfg); break;
        case CountMethod::inclusion_exclusion_sum: s = phi_inclusion_exclusion(x, n, table); break;
    }
    return ExactRatio(BigInt(n + 1) * s, BigInt(x));
}

// a_n(x) is only meaningful for x >= p_{n+1}^2.
inline bool ratio_a_in_domain(u64 x, std::size_t n, const PrimeTable& table) {
    const u64 p = table.nth_prime(n + 1);
    return x >= p * p;
}

inline BigInt primorial(std::size_t n, const PrimeTable& table) {
    detail::require_primes(table, n, "primorial");
    BigInt out = 1;
    for (std::size_t s = 1; s <= n; ++s) out *= table.nth_prime(s);
    return out;
}

// (n + 1) prod_{s<=n} (p_s - 1) / prod_{s<=n} p_s.
inline ExactRatio ratio_a_primorial(std::size_t n, const PrimeTable& table) {
    if (n < 1) throw domain_error("ratio_a_primorial: n must be at least 1");
    detail::require_primes(table, n, "ratio_a_primorial");
    BigInt num = n + 1;
    for (std::size_t s = 1; s <= n; ++s) num *= table.nth_prime(s) - 1;
    return ExactRatio(num, primorial(n, table));
}

enum class TwinCountMethod { direct_sieve, integer_sieve };

// 2 (n + 1) |R(x,n)| / x.
inline ExactRatio ratio_a2(u64 x, std::size_t n, const PrimeTable& table,
                           TwinCountMethod method = TwinCountMethod::direct_sieve, const SieveConfig& cfg = {}) {
    if (x % 6 != 0 || x == 0) throw domain_error("ratio_a2: x must be a positive multiple of 6");
    const u64 r = method == TwinCountMethod::direct_sieve ? twin_residue_count(x, n, table, cfg)
                                                          : twin_residue_count_integer_sieve(x, n, table, cfg);
    return ExactRatio(BigInt(2 * (n + 1)) * r, BigInt(x));
}

// 2 (n + 1) prod_{3<=s<=n} (p_s - 2) / prod_{s<=n} p_s.
inline ExactRatio ratio_a2_primorial(std::size_t n, const PrimeTable& table) {
    if (n < 3) throw domain_error("ratio_a2_primorial: n must be at least 3");
    detail::require_primes(table, n, "ratio_a2_primorial");
    BigInt num = 2 * (n + 1);
    for (std::size_t s = 3; s <= n; ++s) num *= table.nth_prime(s) - 2;
    return ExactRatio(num, primorial(n, table));
}

// K(x,n) = x / ((n + 1)(n + 2)).
inline ExactRatio k_term(u64 x, std::size_t n) {
    return ExactRatio(BigInt(x), BigInt(n + 1) * (n + 2));
}

// x/3 - sum_{s=3..n} x / (s (s + 1)), which telescopes to x / (n + 1).
inline ExactRatio comparison_sieve_residue(u64 x, std::size_t n) {
    ExactRatio out(BigInt(x), BigInt(3));
    for (std::size_t s = 3; s <= n; ++s) out = out - ExactRatio(BigInt(x), BigInt(s) * (s + 1));
    return out;
}

struct KComparison {
    u64 x;
    std::size_t n;
    ExactRatio k_value;
    u64 t_value;
    bool holds;      // K(x,n) >= 6 T(x,n)
    bool in_domain;  // x >= p_{n+2}^2 - 1
};

inline KComparison compare_k_vs_6t(u64 x, std::size_t n, const PrimeTable& table) {
    const u64 p = table.nth_prime(n + 2);
    const u64 t = t_count(x, n, table);
    ExactRatio k = k_term(x, n);
    const bool holds = k >= ExactRatio(BigInt(6) * t, BigInt(1));
    return KComparison{x, n, std::move(k), t, holds, x + 1 >= p * p};
}

enum class RatioMethod { direct_sieve, recursion, closed_form, integer_sieve };

inline const char* to_string(RatioMethod m) {
    switch (m) {
        case RatioMethod::direct_sieve: return "direct-sieve";
        case RatioMethod::recursion: return "recursion";
        case RatioMethod::closed_form: return "closed-form";
        case RatioMethod::integer_sieve: return "integer-sieve";
    }
    return "?";
}

enum class RowStatus { match, discrepancy, method_mismatch, capacity_skipped };

inline const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::match: return "match";
        case RowStatus::discrepancy: return "discrepancy";
        case RowStatus::method_mismatch: return "method-mismatch";
        case RowStatus::capacity_skipped: return "capacity-skipped";
    }
    return "?";
}

// One recomputed table row. `exact` is empty only when the row was skipped.
struct RatioRecord {
    BigInt x;
    std::size_t n;
    RatioMethod method;
    std::optional<ExactRatio> exact;
    std::optional<RatioMethod> cross_method;
    std::optional<ExactRatio> cross_exact;
    std::string paper_value;
    std::optional<ExactRatio> abs_dev;
    RowStatus status;

    // Rendered to four places, or "NA" when skipped.
    std::string value() const { return exact ? exact->to_decimal(4) : "NA"; }
    bool methods_agree() const { return !cross_exact || (exact && *exact == *cross_exact); }
};

struct TableOptions {
    SieveConfig cfg;
    ExactRatio tolerance{BigInt(1), BigInt(10000)};
    bool cross_check = true;
};

struct PublishedRow {
    u64 x;  // 0 marks the primorial row
    const char* value;
};

inline constexpr std::size_t kTableN = 70;

inline const std::vector<PublishedRow>& published_table1() {
    static const std::vector<PublishedRow> rows = {
        {124609, "6.6278"},    {654480, "6.4641"},    {1885128, "6.6046"},   {3279720, "6.6707"},
        {5870928, "6.7240"},   {9480240, "6.7566"},   {13890528, "6.7745"},  {29626248, "6.7911"},
        {62710560, "6.7869"},  {223092870, "6.7650"}, {6469693230, "6.7482"}, {0, "6.7514"},
    };
    return rows;
}

inline const std::vector<PublishedRow>& published_table2() {
    static const std::vector<PublishedRow> rows = {
        {124608, "1.6501"},    {654480, "1.5613"},    {1885128, "1.6317"},   {3279720, "1.6613"},
        {5870928, "1.6855"},   {9480240, "1.7010"},   {13890528, "1.7079"},  {29626248, "1.7158"},
        {62710560, "1.7136"},  {223092870, "1.7030"}, {6469693230, "1.6943"}, {0, "1.6960"},
    };
    return rows;
}

namespace detail {

inline void finish_row(RatioRecord& row, const ExactRatio& tolerance) {
    if (!row.exact) {
        row.status = RowStatus::capacity_skipped;
        return;
    }
    const ExactRatio published = ExactRatio::parse_decimal(row.paper_value);
    ExactRatio dev = *row.exact - published;
    if (dev < ExactRatio(0)) dev = ExactRatio(0) - dev;
    row.abs_dev = dev;
    if (!row.methods_agree())
        row.status = RowStatus::method_mismatch;
    else if (dev <= tolerance)
        row.status = RowStatus::match;
    else
        row.status = RowStatus::discrepancy;
}

inline const PrimeTable& table_primes() {
    static const PrimeTable table(1000);
    return table;
}

}  // namespace detail

// a_70(x) rows: recursion for every finite x, a direct sieve as cross-check
// wherever x fits the sieve limit, the closed form for the primorial row.
inline std::vector<RatioRecord> table_example1(const TableOptions& opts = {}) {
    const PrimeTable& table = detail::table_primes();
    std::vector<RatioRecord> rows;
    for (const auto& pub : published_table1()) {
        RatioRecord row{};
        row.n = kTableN;
        row.paper_value = pub.value;
        if (pub.x == 0) {
            row.x = primorial(kTableN, table);
            row.method = RatioMethod::closed_form;
            row.exact = ratio_a_primorial(kTableN, table);
        } else {
            row.x = pub.x;
            row.method = RatioMethod::recursion;
            row.exact = ratio_a(pub.x, kTableN, table, CountMethod::recursion);
            if (opts.cross_check && pub.x <= opts.cfg.sieve_limit) {
                row.cross_method = RatioMethod::direct_sieve;
                row.cross_exact = ratio_a(pub.x, kTableN, table, CountMethod::direct_sieve, opts.cfg);
            }
        }
        detail::finish_row(row, opts.tolerance);
        rows.push_back(std::move(row));
    }
    return rows;
}

// a_2(70, x) rows: the pair-index sieve for every finite x within the sieve
// limit, the integer sieve as cross-check, the closed form for the primorial.
inline std::vector<RatioRecord> table_example2(const TableOptions& opts = {}) {
    const PrimeTable& table = detail::table_primes();
    std::vector<RatioRecord> rows;
    for (const auto& pub : published_table2()) {
        RatioRecord row{};
        row.n = kTableN;
        row.paper_value = pub.value;
        if (pub.x == 0) {
            row.x = primorial(kTableN, table);
            row.method = RatioMethod::closed_form;
            row.exact = ratio_a2_primorial(kTableN, table);
        } else {
            row.x = pub.x;
            row.method = RatioMethod::direct_sieve;
            if (pub.x <= opts.cfg.sieve_limit) {
                row.exact = ratio_a2(pub.x, kTableN, table, TwinCountMethod::direct_sieve, opts.cfg);
                if (opts.cross_check) {
                    row.cross_method = RatioMethod::integer_sieve;
                    row.cross_exact = ratio_a2(pub.x, kTableN, table, TwinCountMethod::integer_sieve, opts.cfg);
                }
            }
        }
        detail::finish_row(row, opts.tolerance);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace twinsieve

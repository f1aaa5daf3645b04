// bounds.hpp
// Explicit Rosser-Schoenfeld bounds for pi(m) and p_n, the Hardy-Littlewood
// twin prime estimate L_2(m), and the comparison showing that estimate
// dominates the twin-count target a p_{n+1}^2 / (2(n + 1)).

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twinsieve/config.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// Twin prime constant C_2.
inline constexpr double kTwinPrimeConstant = 0.661618155;

// Relative gap below which a floating comparison is not trusted either way.
inline constexpr double kMarginalGap = 1e-12;

enum class BoundVerdict { holds, fails, marginal, out_of_domain };

inline const char* to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::holds: return "holds";
        case BoundVerdict::fails: return "fails";
        case BoundVerdict::marginal: return "marginal";
        case BoundVerdict::out_of_domain: return "out-of-domain";
    }
    return "?";
}

// One evaluation of "lhs < rhs".
struct BoundCheckResult {
    std::string claim;
    u64 index;  // m for pi-side clauses, n for p_n-side clauses
    double lhs;
    double rhs;
    BoundVerdict verdict;

    bool holds() const { return verdict == BoundVerdict::holds; }
};

namespace detail {

inline BoundCheckResult compare_less(std::string claim, u64 index, double lhs, double rhs, bool in_domain) {
    BoundVerdict v = BoundVerdict::out_of_domain;
    if (in_domain) {
        const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
        if (std::fabs(lhs - rhs) <= kMarginalGap * scale)
            v = BoundVerdict::marginal;
        else
            v = lhs < rhs ? BoundVerdict::holds : BoundVerdict::fails;
    }
    return BoundCheckResult{std::move(claim), index, lhs, rhs, v};
}

}  // namespace detail

// m / (log m - 1/2) < pi(m) for m >= 67, and pi(m) < m / (log m - 3/2) for
// m >= e^{3/2}.
inline std::pair<BoundCheckResult, BoundCheckResult> check_rosser_pi(u64 m, const PrimeTable& table) {
    const auto pi = static_cast<double>(table.prime_pi(m));
    const double dm = static_cast<double>(m);
    const double lg = m > 0 ? std::log(dm) : 0.0;
    return {
        detail::compare_less("pi-lower", m, m >= 67 ? dm / (lg - 0.5) : 0.0, pi, m >= 67),
        detail::compare_less("pi-upper", m, pi, dm >= std::exp(1.5) ? dm / (lg - 1.5) : 0.0, dm >= std::exp(1.5)),
    };
}

// m / log m < pi(m) for m >= 17.
inline BoundCheckResult check_pi_lower_simple(u64 m, const PrimeTable& table) {
    const auto pi = static_cast<double>(table.prime_pi(m));
    const double dm = static_cast<double>(m);
    return detail::compare_less("pi-lower-simple", m, m >= 17 ? dm / std::log(dm) : 0.0, pi, m >= 17);
}

// n (log n + log log n - 3/2) < p_n for n >= 2, p_n < n (log n + log log n - 1/2)
// for n >= 20.
inline std::pair<BoundCheckResult, BoundCheckResult> check_rosser_pn(u64 n, const PrimeTable& table) {
    const auto p = static_cast<double>(table.nth_prime(n));
    const double dn = static_cast<double>(n);
    const double l = std::log(dn);
    const double ll = n >= 2 ? std::log(l) : 0.0;
    return {
        detail::compare_less("pn-lower", n, n >= 2 ? dn * (l + ll - 1.5) : 0.0, p, n >= 2),
        detail::compare_less("pn-upper", n, p, n >= 20 ? dn * (l + ll - 0.5) : 0.0, n >= 20),
    };
}

// n log n < p_n for n >= 1, p_n < n (log n + log log n) for n >= 6.
inline std::pair<BoundCheckResult, BoundCheckResult> check_pn_simple(u64 n, const PrimeTable& table) {
    const auto p = static_cast<double>(table.nth_prime(n));
    const double dn = static_cast<double>(n);
    const double l = std::log(dn);
    return {
        detail::compare_less("pn-lower-simple", n, n >= 1 ? dn * l : 0.0, p, n >= 1),
        detail::compare_less("pn-upper-simple", n, p, n >= 6 ? dn * (l + std::log(l)) : 0.0, n >= 6),
    };
}

// Aggregate of one clause over a scanned range.
struct BoundSummary {
    std::string claim;
    u64 lo;
    u64 hi;
    u64 checked = 0;
    u64 out_of_domain = 0;
    u64 failures = 0;
    u64 marginal = 0;
    std::optional<u64> first_failure;
    double min_relative_margin = 0;  // min (rhs - lhs) / rhs over checked points

    void add(const BoundCheckResult& r) {
        if (r.verdict == BoundVerdict::out_of_domain) {
            ++out_of_domain;
            return;
        }
        const double margin = (r.rhs - r.lhs) / std::fabs(r.rhs);
        if (checked == 0 || margin < min_relative_margin) min_relative_margin = margin;
        ++checked;
        if (r.verdict == BoundVerdict::marginal) ++marginal;
        if (r.verdict == BoundVerdict::fails) {
            ++failures;
            if (!first_failure) first_failure = r.index;
        }
    }
};

// Every clause at every m in [1, m_hi] and every n in [1, n_hi].
inline std::vector<BoundSummary> check_rosser_range(u64 m_hi, u64 n_hi, const PrimeTable& table) {
    std::vector<BoundSummary> out;
    for (const char* claim : {"pi-lower", "pi-upper", "pi-lower-simple"}) out.push_back({claim, 1, m_hi, {}, {}, {}, {}, {}, {}});
    for (const char* claim : {"pn-lower", "pn-upper", "pn-lower-simple", "pn-upper-simple"})
        out.push_back({claim, 1, n_hi, {}, {}, {}, {}, {}, {}});
    for (u64 m = 1; m <= m_hi; ++m) {
        const auto [lower, upper] = check_rosser_pi(m, table);
        out[0].add(lower);
        out[1].add(upper);
        out[2].add(check_pi_lower_simple(m, table));
    }
    for (u64 n = 1; n <= n_hi; ++n) {
        const auto [lower, upper] = check_rosser_pn(n, table);
        out[3].add(lower);
        out[4].add(upper);
        const auto [slower, supper] = check_pn_simple(n, table);
        out[5].add(slower);
        out[6].add(supper);
    }
    return out;
}

struct HLEstimate {
    u64 m;
    double integral_value;  // L_2(m) = 2 C_2 int_2^m dt / log^2 t
    double simple_value;    // 2 C_2 m / log^2 m
    double c2 = kTwinPrimeConstant;
    std::size_t panels;
};

namespace detail {

// Composite Simpson for int_2^m dt / log^2 t after t = e^u, i.e.
// int_{log 2}^{log m} e^u / u^2 du, on `panels` (even) panels.
inline double simpson_log_square(double m, std::size_t panels) {
    const double a = std::log(2.0);
    const double b = std::log(m);
    const double h = (b - a) / static_cast<double>(panels);
    auto f = [](double u) { return std::exp(u) / (u * u); };
    double odd = 0, even = 0;
    for (std::size_t i = 1; i < panels; ++i) {
        const double v = f(a + h * static_cast<double>(i));
        (i % 2 == 1 ? odd : even) += v;
    }
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace detail

inline constexpr double kQuadratureTolerance = 1e-6;

// L_2(m) with a fixed panel count; panels must be even.
inline HLEstimate hl_integral_fixed(u64 m, std::size_t panels) {
    if (m < 3) throw domain_error("hl_integral: m must be at least 3");
    if (panels < 2 || panels % 2 != 0) throw domain_error("hl_integral: panel count must be even and positive");
    const double dm = static_cast<double>(m);
    const double lg = std::log(dm);
    return HLEstimate{m, 2 * kTwinPrimeConstant * detail::simpson_log_square(dm, panels),
                      2 * kTwinPrimeConstant * dm / (lg * lg), kTwinPrimeConstant, panels};
}

// L_2(m), doubling the panel count until two successive estimates agree to
// kQuadratureTolerance relative.
inline HLEstimate hl_integral(u64 m) {
    std::size_t panels = 16;
    HLEstimate prev = hl_integral_fixed(m, panels);
    while (true) {
        panels *= 2;
        HLEstimate next = hl_integral_fixed(m, panels);
        if (std::fabs(next.integral_value - prev.integral_value) < kQuadratureTolerance * std::fabs(next.integral_value))
            return next;
        if (panels > (std::size_t{1} << 26)) return next;
        prev = next;
    }
}

// log^2 p_{n+1} < C_2 (n + 1) / a, the condition under which the
// Hardy-Littlewood estimate exceeds a p_{n+1}^2 / (2(n + 1)).
inline BoundCheckResult hl_implies_main(std::size_t n, u64 a, const PrimeTable& table) {
    if (a < 1) throw domain_error("hl_implies_main: a must be at least 1");
    const double lg = std::log(static_cast<double>(table.nth_prime(n + 1)));
    return detail::compare_less("hl-implies-main", n, lg * lg,
                                kTwinPrimeConstant * static_cast<double>(n + 1) / static_cast<double>(a), n >= 3);
}

}  // namespace twinsieve

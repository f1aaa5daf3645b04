// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtimes are printed alongside since several criteria
// carry a time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twinsieve/cli.hpp"
#include "twinsieve/twinsieve.hpp"

#ifndef TWINSIEVE_BINARY
#define TWINSIEVE_BINARY "twinsieve"
#endif

using namespace twinsieve;

namespace {

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

const PrimeTable& big_table() {
    static const PrimeTable t = [] {
        const u64 p = table_with_primes(2001).nth_prime(2001);
        SieveConfig cfg;
        return PrimeTable(p * p, cfg);
    }();
    return t;
}

Check oracle_equivalence(double budget) {
    Check v;
    const auto start = std::chrono::steady_clock::now();
    const PrimeTable table(100'000);
    // Every x <= 10^4 and n <= 10, all three routes.
    std::vector<std::vector<u64>> brute(11);
    for (std::size_t n = 0; n <= 10; ++n) {
        brute[n].assign(10'001, 0);
        for (u64 x = 1; x <= 10'000; ++x) brute[n][x] = brute[n][x - 1] + oracle::coprime_at(x, n);
    }
    u64 checked = 0;
    for (std::size_t n = 0; n <= 10 && v.pass; ++n) {
        PhiCalculator calc(table);
        for (u64 x = 0; x <= 10'000; ++x) {
            const u64 want = brute[n][x];
            const u64 a = calc(x, n);
            const u64 b = phi_direct(x, n, table);
            const u64 c = phi_inclusion_exclusion(x, n, table);
            if (a != want || b != want || c != want) {
                v.require(false, "mismatch at x=" + std::to_string(x) + " n=" + std::to_string(n));
                break;
            }
            ++checked;
        }
    }
    // 1000 random points with x <= 10^7, n <= 50; the 2^n-term sum only for n <= 12.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<u64> xs(1, 10'000'000);
    std::uniform_int_distribution<std::size_t> ns(0, 50);
    u64 with_sum = 0;
    for (int i = 0; i < 1000 && v.pass; ++i) {
        const u64 x = xs(rng);
        const std::size_t n = ns(rng);
        const u64 a = phi_recursion(x, n, table);
        const u64 b = phi_direct(x, n, table);
        bool ok = a == b;
        if (n <= kMaxInclusionExclusionPrimes) {
            ok = ok && phi_inclusion_exclusion(x, n, table) == a;
            ++with_sum;
        }
        v.require(ok, "random mismatch at x=" + std::to_string(x) + " n=" + std::to_string(n));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < budget, "over time budget");
    if (v.pass)
        v.detail = std::to_string(checked) + " grid points, 1000 random (" + std::to_string(with_sum) +
                   " with the 2^n-term sum)";
    return v;
}

std::string deviation(const RatioRecord& r) { return r.abs_dev ? r.abs_dev->to_decimal(6) : "NA"; }

// Each row within tolerance, or a discrepancy with the published value on which the two
// internal routes agree exactly.
void check_rows(Check& v, const std::vector<RatioRecord>& rows, std::string& notes) {
    v.require(rows.size() == 12, "row count " + std::to_string(rows.size()));
    for (const auto& r : rows) {
        const std::string x = r.x.str().size() > 12 ? "primorial" : r.x.str();
        switch (r.status) {
            case RowStatus::match: break;
            case RowStatus::discrepancy:
                v.require(r.cross_exact.has_value() && r.methods_agree(), "unconfirmed discrepancy at x=" + x);
                notes += " published value differs at x=" + x + " (computed " + r.value() + ", published " + r.paper_value +
                         ", |dev| " + deviation(r) + ", routes agree)";
                break;
            case RowStatus::method_mismatch: v.require(false, "routes disagree at x=" + x); break;
            case RowStatus::capacity_skipped: v.require(false, "row skipped at x=" + x); break;
        }
    }
}

Check example_one(double budget) {
    Check v;
    const auto start = std::chrono::steady_clock::now();
    std::string notes;
    check_rows(v, table_example1(), notes);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < budget, "over time budget");
    if (v.pass) v.detail = "12 rows;" + notes;
    return v;
}

Check example_two(double budget) {
    Check v;
    const auto start = std::chrono::steady_clock::now();
    TableOptions opts;
    opts.cfg.sieve_limit = 6'469'693'230ULL;
    opts.cfg.workers = cli::default_workers();
    std::string notes;
    const auto rows = table_example2(opts);
    check_rows(v, rows, notes);
    const PrimeTable small(1000);
    v.require(rows.back().value() == ratio_a2_primorial(70, small).to_decimal(4), "primorial row differs from closed form");
    v.require(rows.back().value() == "1.6960", "primorial row renders " + rows.back().value());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < budget, "over time budget");
    if (v.pass) v.detail = "12 rows, 6469693230 row " + rows[10].value() + ", primorial row 1.6960;" + notes;
    return v;
}

Check the1_scan() {
    Check v;
    const auto r = verify_prime_square_bound(1, 2000, big_table());
    v.require(r.outcomes.size() == 2000, "scan incomplete");
    v.require(!r.first_failure, "fails at n=" + std::to_string(r.first_failure.value_or(0)));
    if (v.pass) v.detail = "n in [1, 2000], zero failures";
    return v;
}

// pi_2 at p_{n+1}^2 by two routes: the prime table, and the pair-index sieve
// through pi_2(X) = |R(X - 1, n)| + pi_2(p_{n+1}); trial division on top for n <= 100.
Check twin_threshold() {
    Check v;
    const PrimeTable& table = big_table();
    const auto r = verify_main(1, 3, 2000, table);
    v.require(r.outcomes.size() == 1998, "scan incomplete");
    SieveConfig cfg;
    cfg.workers = cli::default_workers();
    for (std::size_t n = 3; n <= 2000 && v.pass; ++n) {
        const u64 q = table.nth_prime(n + 1);
        const u64 x = q * q;
        const u64 via_table = table.twin_pi(x);
        const u64 via_pairs = twin_residue_count(x - 1, n, table, cfg) + oracle::twin_pairs(q);
        v.require(via_table == via_pairs, "pi_2 routes disagree at n=" + std::to_string(n));
        v.require(r.outcomes[n - 3].rhs == ExactRatio(via_table), "report pi_2 differs at n=" + std::to_string(n));
        if (n <= 100) v.require(oracle::twin_pairs(x) == via_table, "trial division disagrees at n=" + std::to_string(n));
    }
    v.require(r.threshold_found.has_value(), "no threshold");
    if (!v.pass) return v;
    const u64 found = *r.threshold_found;
    if (found == kPublishedTwinThreshold) {
        v.detail = "N_2(1) = 20";
    } else {
        v.require(r.verdict == twinsieve::Verdict::discrepancy || r.verdict == twinsieve::Verdict::contradicted, "discrepancy not flagged");
        v.require(r.verdict != twinsieve::Verdict::contradicted, "failure at or beyond the published threshold");
        v.detail = "published value differs: N_2(1) = " + std::to_string(found) + " (published 20), report verdict " +
                   to_string(r.verdict) + "; pi_2 confirmed by table and pair-index sieve for n in [3, 2000]";
    }
    return v;
}

Check prime_thresholds() {
    Check v;
    const PrimeTable& table = big_table();
    std::string found;
    for (u64 b : {2, 3, 4}) {
        const auto r = find_threshold(b, 3, 200, table);
        found += (found.empty() ? "" : ", ") + std::string("N(") + std::to_string(b) + ") = " +
                 (r.threshold_found ? std::to_string(*r.threshold_found) : "none");
        v.require(r.threshold_found == r.expected_threshold, "N(" + std::to_string(b) + ") differs");
    }
    if (v.pass) v.detail = found;
    else v.detail += " (" + found + ")";
    return v;
}

Check shifted_twin() {
    Check v;
    const auto r = verify_shifted_twin_bound(2, 1000, big_table());
    v.require(!r.first_failure, "fails at n=" + std::to_string(r.first_failure.value_or(0)));
    if (v.pass) v.detail = "n in [2, 1000], zero failures";
    return v;
}

Check rosser_suite() {
    Check v;
    const PrimeTable table(1'000'000);
    std::string margins;
    for (const auto& s : check_rosser_range(1'000'000, 50'000, table)) {
        v.require(s.failures == 0, s.claim + " fails at " + std::to_string(s.first_failure.value_or(0)));
        v.require(s.marginal == 0, s.claim + " has marginal points");
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s %.4f", margins.empty() ? "" : ", ", s.claim.c_str(), s.min_relative_margin);
        margins += buf;
    }
    if (v.pass) v.detail = "zero failures; min relative margins: " + margins;
    return v;
}

Check hardy_littlewood() {
    Check v;
    const PrimeTable table(1'000'000);
    const u64 twins = table.twin_pi(1'000'000);
    const u64 enumerated = twin_pairs_in(1, 1'000'000).size() + 1;  // plus (3, 5)
    v.require(twins == enumerated, "twin count routes disagree");
    v.require(twins == oracle::twin_pairs(1'000'000), "trial division disagrees");
    const HLEstimate e = hl_integral(1'000'000);
    const double ratio = e.integral_value / static_cast<double>(twins);
    v.require(std::fabs(ratio - 1.0) <= 0.02, "ratio " + std::to_string(ratio));
    char buf[128];
    std::snprintf(buf, sizeof buf, "L_2(10^6) = %.3f, pi_2(10^6) = %llu, ratio %.5f", e.integral_value,
                  static_cast<unsigned long long>(twins), ratio);
    if (v.pass) v.detail = buf;
    return v;
}

Check identity_suites() {
    Check v;
    const PrimeTable& table = big_table();
    for (std::size_t n = 1; n <= 30; ++n) v.require(catalan_identity_check(n).holds, "catalan n=" + std::to_string(n));
    for (std::size_t n = 2; n <= 70; ++n) {
        const auto e = check_union_equivalence(n, table);
        v.require(e.agree && e.partition_holds, "union equivalence n=" + std::to_string(n));
    }
    for (std::size_t n = 3; n <= 40; ++n)
        v.require(check_witness_equivalence(n, table).agree, "witness equivalence n=" + std::to_string(n));
    for (std::size_t n = 3; n <= 40; ++n) {
        const u64 q = table.nth_prime(n + 1);
        const u64 pn = table.nth_prime(n);
        u64 want = 0;
        for (u64 p = pn + 1; p + 2 < q * q; ++p) want += oracle::is_prime(p) && oracle::is_prime(p + 2);
        v.require(twin_residue_count(q * q - 1, n, table) == want, "twin bridge n=" + std::to_string(n));
    }
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 50; ++n) {
        const u64 q = table.nth_prime(n + 1);
        std::uniform_int_distribution<u64> xs(table.nth_prime(n) + 1, q * q - 1);
        for (int i = 0; i < 100; ++i) {
            const u64 x = xs(rng);
            v.require(phi_recursion(x, n, table) == table.prime_pi(x) - n + 1,
                      "prime-count bridge x=" + std::to_string(x) + " n=" + std::to_string(n));
        }
    }
    if (v.pass)
        v.detail = "catalan n <= 30, union n <= 70, witness n <= 40, twin bridge n <= 40, prime-count bridge n <= 50";
    return v;
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = pclose(pipe);
    return out;
}

Check determinism() {
    Check v;
    const std::vector<std::string> commands = {
        "table1 --format csv",
        "table2 --format csv",
        "table2 --format json --sieve-limit 6469693230",
        "verify the1 --format csv",
        "verify th3 --format csv",
        "verify th4 --format csv",
        "verify maint32 --format csv",
        "verify maint33 --format json",
        "verify maint133 --format csv",
        "verify l03 --format csv",
        "verify maint31 --format csv",
        "verify catalan --format csv",
        "threshold a --a 1 --format csv",
        "threshold b --b 3 --format json",
        "bounds rosser --format csv",
        "bounds hl --n-hi 200 --format csv",
        "catalan --format table",
    };
    std::size_t runs = 0;
    for (const auto& cmd : commands) {
        std::string first;
        for (const char* workers : {"1", "8", "1", "8"}) {
            int status = 0;
            const std::string out = capture(std::string(TWINSIEVE_BINARY) + " --workers " + workers + " " + cmd, status);
            ++runs;
            v.require(status == 0, "'" + cmd + "' exited with " + std::to_string(status));
            v.require(!out.empty(), "'" + cmd + "' printed nothing");
            if (first.empty()) first = out;
            v.require(out == first, "'" + cmd + "' differs at --workers " + workers);
        }
    }
    if (v.pass) v.detail = std::to_string(commands.size()) + " commands, " + std::to_string(runs) + " runs, byte-identical";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", [] { return oracle_equivalence(60); }},
        {2, "Example 1 reproduction", [] { return example_one(300); }},
        {3, "Example 2 reproduction", [] { return example_two(900); }},
        {4, "prime-square bound scan", the1_scan},
        {5, "N_2(1) threshold", twin_threshold},
        {6, "N(b) thresholds", prime_thresholds},
        {7, "shifted twin bound scan", shifted_twin},
        {8, "Rosser-Schoenfeld suite", rosser_suite},
        {9, "Hardy-Littlewood sanity", hardy_littlewood},
        {10, "identity suites", identity_suites},
        {11, "determinism", determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " " << c.name << " [" << timing
                  << "]: " << v.detail << std::endl;
        failures += !v.pass;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}

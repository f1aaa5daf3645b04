// cli.hpp
// Command-line front end. `run` parses argv, dispatches to a subcommand and
// writes the report to `out`; diagnostics go to `err`.
//
// Exit status: 0 success (whatever the verdicts say), 1 internal failure,
// 2 usage error, 3 capacity exceeded, 4 argument outside a domain.

#pragma once

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "twinsieve/bounds.hpp"
#include "twinsieve/conjecture.hpp"
#include "twinsieve/legendre.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/ratios.hpp"
#include "twinsieve/report.hpp"

namespace twinsieve::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kCapacity = 3, kDomain = 4 };

struct RunConfig {
    SieveConfig sieve;
    OutputFormat format = OutputFormat::table;
    std::string tolerance = "0.0001";
    TwinConvention convention = TwinConvention::pairs;
};

// Flags shared by every subcommand.
struct Args {
    std::optional<u64> n, x, a, b, n_lo, n_hi;
    std::vector<u64> x_samples;
    std::string method;
    std::string claim;
};

inline unsigned default_workers() {
    if (const char* env = std::getenv("TWINSIEVE_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline u64 need(const std::optional<u64>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

// Table holding every prime up to `limit`, refused past the sieve limit.
inline PrimeTable table_to(u64 limit, const RunConfig& rc) { return PrimeTable(std::max<u64>(limit, 2), rc.sieve); }

// Table holding p_1..p_count.
inline PrimeTable table_for_index(std::size_t count, const RunConfig& rc) {
    SieveConfig cfg = rc.sieve;
    cfg.sieve_limit = std::max<u64>(cfg.sieve_limit, 1'000'000);
    return table_with_primes(count, cfg);
}

// Table reaching p_index^2.
inline PrimeTable table_to_square(std::size_t index, const RunConfig& rc) {
    const PrimeTable small = table_for_index(index, rc);
    const u64 p = small.nth_prime(index);
    return table_to(p * p, rc);
}

inline void emit_scalar(std::ostream& out, const RunConfig& rc, const std::string& quantity, std::optional<u64> x,
                        std::optional<u64> n, const Cell& value) {
    if (rc.format == OutputFormat::table) {
        out << value.text << '\n';
        return;
    }
    ReportTable t = value_table();
    t.rows.push_back({text_cell(quantity), x ? integer_cell(*x) : na_cell(), n ? integer_cell(*n) : na_cell(), value});
    write_report(t, rc.format, out);
}

// Doubling sample from `from` up to `to`, optionally rounded up to multiples of 6.
inline std::vector<u64> geometric_samples(u64 from, u64 to, bool multiple_of_six) {
    std::vector<u64> out;
    for (u64 x = from; x <= to; x *= 2) {
        const u64 v = multiple_of_six ? (x + 5) / 6 * 6 : x;
        if (v <= to) out.push_back(v);
    }
    return out;
}

inline ExactRatio parse_tolerance(const std::string& text) {
    const ExactRatio tol = ExactRatio::parse_decimal(text);
    if (tol <= ExactRatio(0)) throw domain_error("tolerance must be positive");
    return tol;
}

}  // namespace detail

inline void cmd_pi(const Args& a, const RunConfig& rc, std::ostream& out) {
    const u64 x = detail::need(a.x, "--x");
    const PrimeTable table = detail::table_to(x, rc);
    detail::emit_scalar(out, rc, "pi", x, std::nullopt, integer_cell(table.prime_pi(x)));
}

inline void cmd_pi2(const Args& a, const RunConfig& rc, std::ostream& out) {
    const u64 x = detail::need(a.x, "--x");
    const PrimeTable table = detail::table_to(rc.convention == TwinConvention::members ? x + 2 : x, rc);
    detail::emit_scalar(out, rc, "pi2", x, std::nullopt, integer_cell(table.twin_pi(x, rc.convention)));
}

inline void cmd_nth_prime(const Args& a, const RunConfig& rc, std::ostream& out) {
    const u64 n = detail::need(a.n, "--n");
    if (n == 0) throw domain_error("nth-prime: index is 1-based");
    const PrimeTable table = detail::table_for_index(n, rc);
    detail::emit_scalar(out, rc, "nth-prime", std::nullopt, n, integer_cell(table.nth_prime(n)));
}

inline void cmd_phi(const Args& a, const RunConfig& rc, std::ostream& out) {
    const u64 x = detail::need(a.x, "--x");
    const u64 n = detail::need(a.n, "--n");
    const PrimeTable table = detail::table_for_index(n + 1, rc);
    u64 v = 0;
    if (a.method.empty() || a.method == "recursion")
        v = phi_recursion(x, n, table);
    else if (a.method == "direct")
        v = phi_direct(x, n, table, rc.sieve);
    else if (a.method == "inclusion-exclusion")
        v = phi_inclusion_exclusion(x, n, table);
    else
        throw CLI::ValidationError("--method", "expected recursion, direct or inclusion-exclusion");
    detail::emit_scalar(out, rc, "phi", x, n, integer_cell(v));
}

inline void cmd_twin_residue(const Args& a, const RunConfig& rc, std::ostream& out) {
    const u64 x = detail::need(a.x, "--x");
    const u64 n = detail::need(a.n, "--n");
    const PrimeTable table = detail::table_for_index(n + 1, rc);
    u64 v = 0;
    if (a.method.empty() || a.method == "pair")
        v = twin_residue_count(x, n, table, rc.sieve);
    else if (a.method == "integer")
        v = twin_residue_count_integer_sieve(x, n, table, rc.sieve);
    else
        throw CLI::ValidationError("--method", "expected pair or integer");
    detail::emit_scalar(out, rc, "twin-residue", x, n, integer_cell(v));
}

// Without --x the primorial closed form is returned.
inline void cmd_ratio(const Args& a, const RunConfig& rc, std::ostream& out, bool twin) {
    const u64 n = detail::need(a.n, "--n");
    const PrimeTable table = detail::table_for_index(n + 1, rc);
    ExactRatio v;
    if (!a.x) {
        v = twin ? ratio_a2_primorial(n, table) : ratio_a_primorial(n, table);
    } else if (twin) {
        v = ratio_a2(*a.x, n, table,
                     a.method == "integer" ? TwinCountMethod::integer_sieve : TwinCountMethod::direct_sieve, rc.sieve);
    } else {
        v = ratio_a(*a.x, n, table, a.method == "direct" ? CountMethod::direct_sieve : CountMethod::recursion,
                    rc.sieve);
    }
    detail::emit_scalar(out, rc, twin ? "ratio-a2" : "ratio-a", a.x, n, Cell{v.to_decimal(4), CellKind::decimal});
}

inline void cmd_table(const RunConfig& rc, std::ostream& out, bool twin) {
    TableOptions opts;
    opts.cfg = rc.sieve;
    opts.tolerance = detail::parse_tolerance(rc.tolerance);
    write_report(ratio_report(twin ? table_example2(opts) : table_example1(opts)), rc.format, out);
}

inline VerificationReport run_main_scan(u64 a, std::size_t lo, std::size_t hi, const RunConfig& rc) {
    const u64 p = detail::table_for_index(hi + 1, rc).nth_prime(hi + 1);
    const PrimeTable table = detail::table_to(rc.convention == TwinConvention::members ? p * p + 2 : p * p, rc);
    return verify_main(a, lo, hi, table, rc.convention);
}

inline void cmd_verify(const Args& a, const RunConfig& rc, std::ostream& out) {
    ReportTable t = claim_table();
    const std::string& c = a.claim;
    if (c == "the1") {
        const std::size_t hi = a.n_hi.value_or(2000);
        append_verification(t, verify_prime_square_bound(a.n_lo.value_or(1), hi, detail::table_to_square(hi + 1, rc)));
    } else if (c == "th3" || c == "th4") {
        const bool twin = c == "th4";
        const u64 n = a.n.value_or(twin ? 70 : 10);
        const PrimeTable table = detail::table_for_index(n + 1, rc);
        std::vector<u64> samples = a.x_samples;
        if (samples.empty()) {
            const u64 p = table.nth_prime(n + 1);
            const u64 top = std::min<u64>(100'000'000, rc.sieve.sieve_limit);
            samples = detail::geometric_samples(twin ? p * p - 1 : p * p, top, twin);
        }
        append_verification(t, twin ? verify_twin_residue_density(n, samples, table, rc.sieve)
                                    : verify_coprime_density(n, samples, table, rc.sieve));
    } else if (c == "maint32") {
        const std::size_t hi = a.n_hi.value_or(200);
        append_verification(t, find_threshold(a.b.value_or(2), a.n_lo.value_or(3), hi,
                                              detail::table_to_square(hi + 1, rc)));
    } else if (c == "maint33") {
        append_verification(t, run_main_scan(a.a.value_or(1), a.n_lo.value_or(3), a.n_hi.value_or(2000), rc));
    } else if (c == "maint133") {
        const std::size_t hi = a.n_hi.value_or(1000);
        append_verification(t, verify_shifted_twin_bound(a.n_lo.value_or(2), hi, detail::table_to_square(hi + 3, rc)));
    } else if (c == "l03") {
        const std::size_t hi = a.n_hi.value_or(70);
        append_verification(t, scan_union_equivalence(a.n_lo.value_or(2), hi, detail::table_to_square(hi + 1, rc),
                                                      rc.sieve));
    } else if (c == "maint31") {
        const std::size_t hi = a.n_hi.value_or(40);
        append_verification(t, scan_witness_equivalence(a.n_lo.value_or(3), hi, detail::table_to_square(hi + 1, rc),
                                                        rc.sieve));
    } else if (c == "catalan") {
        append_verification(t, scan_catalan(a.n_lo.value_or(1), a.n_hi.value_or(kMaxCatalanN)));
    } else {
        throw CLI::ValidationError("claim", "unknown claim '" + c +
                                                "' (the1, th3, th4, maint32, maint33, maint133, l03, maint31, catalan)");
    }
    write_report(t, rc.format, out);
}

// threshold b: N(b) over [n_lo, n_hi]; threshold a: N_2(a).
inline void cmd_threshold(const std::string& which, const Args& a, const RunConfig& rc, std::ostream& out) {
    ReportTable t = claim_table();
    if (which == "b") {
        const std::size_t hi = a.n_hi.value_or(200);
        append_verification(t, find_threshold(detail::need(a.b, "--b"), a.n_lo.value_or(3), hi,
                                              detail::table_to_square(hi + 1, rc)));
    } else if (which == "a") {
        append_verification(t, run_main_scan(detail::need(a.a, "--a"), a.n_lo.value_or(3), a.n_hi.value_or(2000), rc));
    } else {
        throw CLI::ValidationError("kind", "expected 'a' or 'b'");
    }
    write_report(t, rc.format, out);
}

// bounds rosser: every clause for m <= --x (default 10^6), n <= --n-hi
// (default 5 * 10^4). bounds hl: L_2(--x) against pi_2, then the
// hl-implies-main comparison over [--n-lo, --n-hi] when --n-hi is given.
inline void cmd_bounds(const std::string& which, const Args& a, const RunConfig& rc, std::ostream& out) {
    if (which == "rosser") {
        const u64 m_hi = a.x.value_or(1'000'000);
        const u64 n_hi = a.n_hi.value_or(50'000);
        const PrimeTable small = detail::table_for_index(n_hi, rc);
        const PrimeTable table = detail::table_to(std::max(m_hi, small.nth_prime(n_hi)), rc);
        ReportTable t = claim_table();
        for (const auto& s : check_rosser_range(m_hi, n_hi, table)) append_bound_summary(t, s);
        write_report(t, rc.format, out);
    } else if (which == "hl") {
        const u64 m = a.x.value_or(1'000'000);
        const HLEstimate est = hl_integral(m);
        const PrimeTable table = detail::table_to(m, rc);
        const u64 twins = table.twin_pi(m);
        ReportTable t = value_table();
        t.rows.push_back({text_cell("hl-integral"), integer_cell(m), na_cell(), decimal_cell(est.integral_value)});
        t.rows.push_back({text_cell("hl-simple"), integer_cell(m), na_cell(), decimal_cell(est.simple_value)});
        t.rows.push_back({text_cell("quadrature-panels"), integer_cell(m), na_cell(), integer_cell(est.panels)});
        t.rows.push_back({text_cell("pi2"), integer_cell(m), na_cell(), integer_cell(twins)});
        t.rows.push_back({text_cell("hl-ratio"), integer_cell(m), na_cell(),
                          decimal_cell(est.integral_value / static_cast<double>(twins))});
        if (a.n_hi) {
            const u64 coef = a.a.value_or(1);
            const PrimeTable idx = detail::table_for_index(*a.n_hi + 1, rc);
            ReportTable c = claim_table();
            for (u64 n = a.n_lo.value_or(3); n <= *a.n_hi; ++n) append_bound(c, hl_implies_main(n, coef, idx));
            write_report(t, rc.format, out);
            write_report(c, rc.format, out);
            return;
        }
        write_report(t, rc.format, out);
    } else {
        throw CLI::ValidationError("kind", "expected 'rosser' or 'hl'");
    }
}

inline void cmd_catalan(const Args& a, const RunConfig& rc, std::ostream& out) {
    if (a.n) {
        const auto c = catalan_identity_check(*a.n);
        ReportTable t = value_table();
        t.rows.push_back({text_cell("catalan"), na_cell(), integer_cell(c.n), integer_cell(c.catalan)});
        t.rows.push_back({text_cell("difference-form"), na_cell(), integer_cell(c.n), integer_cell(c.difference_form)});
        t.rows.push_back({text_cell("sum-form"), na_cell(), integer_cell(c.n), integer_cell(c.sum_form)});
        t.rows.push_back({text_cell("identity"), na_cell(), integer_cell(c.n), text_cell(c.holds ? "holds" : "fails")});
        write_report(t, rc.format, out);
        return;
    }
    ReportTable t = claim_table();
    append_verification(t, scan_catalan(a.n_lo.value_or(1), a.n_hi.value_or(kMaxCatalanN)));
    write_report(t, rc.format, out);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"twinsieve: prime, twin-prime and Legendre-sieve counts with claim verification"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    RunConfig rc;
    rc.sieve.workers = default_workers();
    Args args;
    std::string format = "table";
    std::string convention = "pairs";

    app.add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--workers", rc.sieve.workers, "worker threads (default: TWINSIEVE_WORKERS or core count)")
        ->check(CLI::PositiveNumber);
    app.add_option("--segment-size", rc.sieve.segment_size, "sieve candidates per segment (>= 4096)")
        ->check(CLI::Range(std::size_t{kMinSegmentSize}, std::size_t{1} << 34))
        ->capture_default_str();
    app.add_option("--sieve-limit", rc.sieve.sieve_limit,
                   "largest integer any sieve may cover; the 6469693230 table2 row needs at least that")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tolerance", rc.tolerance, "table comparison tolerance as a decimal")->capture_default_str();
    app.add_option("--convention", convention, "pi2 counting: pairs (p+2 <= m) or members (p <= m)")
        ->check(CLI::IsMember({"pairs", "members"}))
        ->capture_default_str();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", args.n, "sieve depth or prime index");
        sub->add_option("--x", args.x, "upper end of the counted interval");
        sub->add_option("--a", args.a, "twin-count coefficient");
        sub->add_option("--b", args.b, "prime-count coefficient");
        sub->add_option("--n-lo", args.n_lo, "first index of a scan");
        sub->add_option("--n-hi", args.n_hi, "last index of a scan");
        sub->add_option("--x-samples", args.x_samples, "comma-separated x values")->delimiter(',');
    };

    std::function<void()> action;
    auto sub = [&](const char* name, const char* help, std::function<void()> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s);
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    sub("pi", "prime count pi(x)", [&] { cmd_pi(args, rc, out); });
    sub("pi2", "twin-prime count pi_2(x)", [&] { cmd_pi2(args, rc, out); });
    sub("nth-prime", "the n-th prime, p_1 = 2", [&] { cmd_nth_prime(args, rc, out); });
    sub("phi", "S(x,n): integers <= x coprime to p_1..p_n", [&] { cmd_phi(args, rc, out); })
        ->add_option("--method", args.method, "recursion, direct or inclusion-exclusion");
    sub("twin-residue", "|R(x,n)| for x a multiple of 6", [&] { cmd_twin_residue(args, rc, out); })
        ->add_option("--method", args.method, "pair or integer");
    sub("ratio-a", "(n+1) S(x,n) / x; primorial closed form without --x", [&] { cmd_ratio(args, rc, out, false); })
        ->add_option("--method", args.method, "recursion or direct");
    sub("ratio-a2", "2(n+1) |R(x,n)| / x; primorial closed form without --x", [&] { cmd_ratio(args, rc, out, true); })
        ->add_option("--method", args.method, "pair or integer");
    sub("table1", "recompute the a_70(x) table", [&] { cmd_table(rc, out, false); });
    sub("table2", "recompute the a_2(70,x) table (the 6469693230 row needs --sieve-limit 6469693230)",
        [&] { cmd_table(rc, out, true); });
    sub("verify", "scan one claim: the1 th3 th4 maint32 maint33 maint133 l03 maint31 catalan", [&] { cmd_verify(args, rc, out); })
        ->add_option("claim", args.claim, "claim identifier")
        ->required();
    std::string kind;
    sub("threshold", "N(b) (kind b) or N_2(a) (kind a)", [&] { cmd_threshold(kind, args, rc, out); })
        ->add_option("kind", kind, "a or b")
        ->required();
    std::string bound_kind;
    sub("bounds", "explicit prime bounds (rosser) or the Hardy-Littlewood estimate (hl)",
        [&] { cmd_bounds(bound_kind, args, rc, out); })
        ->add_option("kind", bound_kind, "rosser or hl")
        ->required();
    sub("catalan", "Catalan identity at --n, or scanned over [--n-lo, --n-hi]", [&] { cmd_catalan(args, rc, out); });

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty()) throw CLI::RequiredError("a subcommand (see --help)");
        rc.format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::table;
        rc.convention = convention == "members" ? TwinConvention::members : TwinConvention::pairs;
        rc.sieve.validate();
        detail::parse_tolerance(rc.tolerance);
        if (action) action();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}

}  // namespace twinsieve::cli

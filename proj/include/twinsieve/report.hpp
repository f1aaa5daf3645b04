// report.hpp
// Rendering of results as an aligned text table, CSV (header row, LF, no
// quoting) or a JSON array of objects keyed by the CSV headers.
//
// Schemas:
//   ratio rows    x,n,method,computed,paper_value,abs_dev,cross_check,status
//   claim rows    claim,kind,index,lhs,rhs,outcome
//   value rows    quantity,x,n,value

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsieve/bounds.hpp"
#include "twinsieve/conjecture.hpp"
#include "twinsieve/exact_ratio.hpp"
#include "twinsieve/ratios.hpp"

namespace twinsieve {

enum class OutputFormat { table, csv, json };

// JSON type of a cell. `integer` cells that may exceed 2^53 are emitted as
// decimal strings.
enum class CellKind { integer, decimal, big_integer, text };

struct Cell {
    std::string text;
    CellKind kind = CellKind::text;
};

inline Cell integer_cell(u64 v) { return {std::to_string(v), CellKind::integer}; }
inline Cell big_cell(const BigInt& v) { return {v.str(), CellKind::big_integer}; }
inline Cell text_cell(std::string v) { return {std::move(v), CellKind::text}; }
inline Cell na_cell() { return {"NA", CellKind::text}; }

inline Cell decimal_cell(double v, int places = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return {buf, CellKind::decimal};
}

// Integers render exactly, everything else to four places.
inline Cell ratio_cell(const ExactRatio& r) {
    if (r.is_integer()) return {r.numerator().str(), CellKind::big_integer};
    return {r.to_decimal(4), CellKind::decimal};
}

struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline void write_csv(const ReportTable& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text;
        out << '\n';
    }
}

inline void write_json(const ReportTable& t, std::ostream& out) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            switch (c.kind) {
                case CellKind::integer: obj[t.columns[i]] = std::stoull(c.text); break;
                case CellKind::decimal: obj[t.columns[i]] = nlohmann::ordered_json::parse(c.text); break;
                case CellKind::big_integer:
                case CellKind::text: obj[t.columns[i]] = c.text; break;
            }
        }
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

inline void write_text(const ReportTable& t, std::ostream& out) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
    auto line = [&](auto cell_text) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const std::string s = cell_text(i);
            out << s;
            if (i + 1 < t.columns.size()) out << std::string(width[i] - s.size() + 2, ' ');
        }
        out << '\n';
    };
    line([&](std::size_t i) { return t.columns[i]; });
    for (const auto& row : t.rows) line([&](std::size_t i) { return row[i].text; });
}

inline void write_report(const ReportTable& t, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::table: write_text(t, out); break;
        case OutputFormat::csv: write_csv(t, out); break;
        case OutputFormat::json: write_json(t, out); break;
    }
}

inline ReportTable ratio_report(const std::vector<RatioRecord>& rows) {
    ReportTable t{{"x", "n", "method", "computed", "paper_value", "abs_dev", "cross_check", "status"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({
            big_cell(r.x),
            integer_cell(r.n),
            text_cell(to_string(r.method)),
            r.exact ? Cell{r.exact->to_decimal(4), CellKind::decimal} : na_cell(),
            Cell{r.paper_value, CellKind::decimal},
            r.abs_dev ? Cell{r.abs_dev->to_decimal(6), CellKind::decimal} : na_cell(),
            text_cell(r.cross_method ? to_string(*r.cross_method) : "none"),
            text_cell(to_string(r.status)),
        });
    }
    return t;
}

inline ReportTable claim_table() { return {{"claim", "kind", "index", "lhs", "rhs", "outcome"}, {}}; }

// Point rows, then summary rows:
//   verdict        index = points scanned, lhs = lo, rhs = hi, outcome = verdict
//   first_failure  index = first failing index or NA
//   threshold      index = threshold found, rhs = published threshold
inline void append_verification(ReportTable& t, const VerificationReport& r) {
    for (const auto& p : r.outcomes) {
        t.rows.push_back({text_cell(r.claim), text_cell("point"), integer_cell(p.index), ratio_cell(p.lhs),
                          ratio_cell(p.rhs), text_cell(to_string(p.outcome))});
    }
    t.rows.push_back({text_cell(r.claim), text_cell("verdict"), integer_cell(r.outcomes.size()), integer_cell(r.lo),
                      integer_cell(r.hi), text_cell(to_string(r.verdict))});
    t.rows.push_back({text_cell(r.claim), text_cell("first_failure"),
                      r.first_failure ? integer_cell(*r.first_failure) : na_cell(), na_cell(), na_cell(),
                      text_cell(r.first_failure ? "fail" : "none")});
    if (r.threshold_found || r.expected_threshold) {
        const char* outcome = !r.expected_threshold                          ? "unpublished"
                              : r.threshold_found == r.expected_threshold ? "match"
                                                                            : "discrepancy";
        t.rows.push_back({text_cell(r.claim), text_cell("threshold"),
                          r.threshold_found ? integer_cell(*r.threshold_found) : na_cell(),
                          r.threshold_found ? integer_cell(*r.threshold_found) : na_cell(),
                          r.expected_threshold ? integer_cell(*r.expected_threshold) : na_cell(), text_cell(outcome)});
    }
}

inline void append_bound(ReportTable& t, const BoundCheckResult& r) {
    t.rows.push_back({text_cell(r.claim), text_cell("point"), integer_cell(r.index), decimal_cell(r.lhs),
                      decimal_cell(r.rhs), text_cell(to_string(r.verdict))});
}

// Per-clause summary: index = points checked, lhs/rhs = scanned range,
// outcome = holds when no point failed.
inline void append_bound_summary(ReportTable& t, const BoundSummary& s) {
    t.rows.push_back({text_cell(s.claim), text_cell("verdict"), integer_cell(s.checked), integer_cell(s.lo),
                      integer_cell(s.hi), text_cell(s.failures == 0 ? (s.marginal == 0 ? "holds" : "marginal") : "fails")});
    t.rows.push_back({text_cell(s.claim), text_cell("first_failure"),
                      s.first_failure ? integer_cell(*s.first_failure) : na_cell(), na_cell(), na_cell(),
                      text_cell(s.first_failure ? "fail" : "none")});
    t.rows.push_back({text_cell(s.claim), text_cell("min_margin"), integer_cell(s.checked),
                      decimal_cell(s.min_relative_margin, 9), na_cell(), text_cell("info")});
}

inline ReportTable value_table() { return {{"quantity", "x", "n", "value"}, {}}; }

}  // namespace twinsieve

#ifndef BENFORD_CLI_HPP
#define BENFORD_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "digits.hpp"
#include "qseries.hpp"
#include "sequences.hpp"
#include "udstats.hpp"

namespace benford::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline long parse_long(std::string_view text, std::string_view what)
{
    try {
        std::size_t used = 0;
        const std::string s(text);
        const long v = std::stol(s, &used);
        if (used != s.size()) {
            throw UsageError("");
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

}  // namespace detail

/// "24^-1,48^1" -> eta(24z)^-1 eta(48z).
inline qseries::EtaQuotientSpec parse_eta_quotient(std::string_view text)
{
    if (text.empty()) {
        throw UsageError("empty eta quotient");
    }
    std::vector<qseries::EtaFactor> terms;
    for (auto part : detail::split(text, ',')) {
        const auto pieces = detail::split(part, '^');
        if (pieces.size() > 2 || pieces[0].empty()) {
            throw UsageError("invalid eta quotient factor: '" + std::string(part) + "'");
        }
        const long delta = detail::parse_long(pieces[0], "eta quotient delta");
        // bare delta means exponent 1
        const long r = pieces.size() == 2 ? detail::parse_long(pieces[1], "eta quotient exponent") : 1;
        terms.push_back({delta, r});
    }
    try {
        return qseries::EtaQuotientSpec(std::move(terms));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

/// Resolves a selector: p, b_s:<s>, r:<g>,<delta>, eta_quotient:<spec>, jE4cubed, rr_sum:<a>.
inline sequences::IntegerSequence make_sequence(std::string_view selector)
{
    const auto colon = selector.find(':');
    const std::string_view head = selector.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : selector.substr(colon + 1);
    const bool has_args = colon != std::string_view::npos;
    try {
        if (head == "p" && !has_args) {
            return sequences::partition_sequence();
        }
        if (head == "jE4cubed" && !has_args) {
            return sequences::j_e4_cubed_sequence();
        }
        if (head == "b_s" && has_args) {
            return sequences::regular_partition_sequence(detail::parse_long(args, "s"));
        }
        if (head == "r" && has_args) {
            const auto parts = detail::split(args, ',');
            if (parts.size() != 2) {
                throw UsageError("r selector needs r:<g>,<delta>");
            }
            return sequences::rg_delta_sequence(detail::parse_long(parts[0], "g"), detail::parse_long(parts[1], "delta"));
        }
        if (head == "rr_sum" && has_args) {
            const long a = detail::parse_long(args, "a");
            if (a != 0 && a != 1) {
                throw UsageError("rr_sum parameter must be 0 or 1");
            }
            return sequences::rogers_ramanujan_sequence(static_cast<int>(a));
        }
        if (head == "eta_quotient" && has_args) {
            return sequences::eta_quotient_sequence(parse_eta_quotient(args), std::string(selector));
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown sequence selector: '" + std::string(selector) + "'");
}

struct PaperTable {
    int id;
    std::string caption;
    std::string selector;
    int base;
    std::vector<std::string> strings;
    std::vector<long> xs;
    std::vector<int> decimals;  // per x row
    int limit_decimals;
    bool leading_zero;
};

inline const std::vector<PaperTable>& paper_tables()
{
    static const std::vector<PaperTable> tables{
        {1, "B(d,x,10;p(n))", "p", 10, {"1", "2", "3", "4", "5", "6", "7", "8", "9"}, {100, 1000, 10000}, {2, 3, 3}, 3,
         true},
        {2, "B(d,x,2;p(n))", "p", 2, {"100", "101", "110", "111"}, {200, 400, 600, 800, 1000, 5000},
         {3, 3, 3, 3, 3, 3}, 3, true},
        {3, "B(d,x,3;j(z)*E4(z)^3)", "jE4cubed", 3, {"10", "11", "12", "20", "21", "22"}, {500, 1000, 1500, 2000},
         {4, 4, 4, 4}, 4, false},
    };
    return tables;
}

inline const PaperTable& paper_table(int id)
{
    for (const auto& t : paper_tables()) {
        if (t.id == id) {
            return t;
        }
    }
    throw UsageError("table must be 1, 2 or 3");
}

/// Convention that reproduces every printed table.
constexpr udstats::RangeConvention table_convention = udstats::RangeConvention::FromOne;

/// cells[row][column]: B(d, x, k; a) for every x row and digit-string column.
inline std::vector<std::vector<udstats::Frequency>> compute_table(const PaperTable& t,
                                                                 udstats::RangeConvention convention)
{
    auto seq = make_sequence(t.selector);
    const auto range = udstats::sample_range(convention, *std::max_element(t.xs.begin(), t.xs.end()));
    seq.ensure(range.last);
    std::vector<digits::DigitQuery> queries;
    for (const auto& s : t.strings) {
        queries.push_back(digits::DigitQuery::parse(t.base, s));
    }
    std::vector<std::vector<udstats::Frequency>> cells;
    for (long x : t.xs) {
        auto& row = cells.emplace_back();
        for (const auto& q : queries) {
            row.push_back(udstats::benford_b(seq, q, x, convention));
        }
    }
    return cells;
}

inline std::string format_target(double v, int decimals, bool leading_zero)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    if (!leading_zero && s.rfind("0.", 0) == 0) {
        s.erase(0, 1);
    }
    return s;
}

/// Plain-text rendering with the per-row rounding of the printed tables.
inline std::string render_table(const PaperTable& t, const std::vector<std::vector<udstats::Frequency>>& cells,
                                udstats::RangeConvention convention)
{
    std::ostringstream out;
    out << "Table " << t.id << ": " << t.caption << "  [n in " << udstats::to_string(convention) << " range]\n";
    out << "x";
    for (const auto& s : t.strings) {
        out << "\td=" << s;
    }
    out << '\n';
    for (std::size_t r = 0; r < t.xs.size(); ++r) {
        out << t.xs[r];
        for (const auto& f : cells[r]) {
            out << '\t' << udstats::format_fixed(f.rounded_units(t.decimals[r]), t.decimals[r], t.leading_zero);
        }
        out << '\n';
    }
    out << "inf?";
    for (const auto& s : t.strings) {
        const double target = udstats::benford_target(digits::DigitQuery::parse(t.base, s));
        out << '\t' << format_target(target, t.limit_decimals, t.leading_zero);
    }
    out << '\n';
    return out.str();
}

}  // namespace benford::cli

#endif  // BENFORD_CLI_HPP

#ifndef BENFORD_REPORT_IO_HPP
#define BENFORD_REPORT_IO_HPP

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "udstats.hpp"

namespace benford::udstats {

namespace detail {

constexpr std::uint64_t max_safe_integer = (std::uint64_t{1} << 53) - 1;

// Integers beyond 2^53 - 1 are written as decimal strings.
inline nlohmann::json safe_integer(std::uint64_t v)
{
    if (v <= max_safe_integer) {
        return v;
    }
    return std::to_string(v);
}

inline std::uint64_t read_integer(const nlohmann::json& j)
{
    if (j.is_string()) {
        return std::stoull(j.get<std::string>());
    }
    return j.get<std::uint64_t>();
}

}  // namespace detail

inline nlohmann::json to_json(const BenfordReport& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"string", row.string},
                        {"count", detail::safe_integer(row.count)},
                        {"freq", r.frequency(row).value()},
                        {"benford_target", row.target}});
    }
    nlohmann::json weyl = nlohmann::json::array();
    for (const auto& w : r.weyl) {
        weyl.push_back({{"m", w.m}, {"magnitude", w.magnitude}, {"N", detail::safe_integer(w.n)}});
    }
    return {{"sequence", r.sequence},
            {"range_convention", std::string(to_string(r.range))},
            {"base", r.base},
            {"string_len", r.string_len},
            {"x", detail::safe_integer(r.x)},
            {"rows", rows},
            {"skipped_zero", detail::safe_integer(r.skipped_zero)},
            {"skipped_short", detail::safe_integer(r.skipped_short)},
            {"chi_square", r.chi_square},
            {"star_discrepancy", r.star_discrepancy},
            {"weyl", weyl}};
}

inline BenfordReport report_from_json(const nlohmann::json& j)
{
    BenfordReport r;
    r.sequence = j.at("sequence").get<std::string>();
    r.range = parse_range_convention(j.at("range_convention").get<std::string>());
    r.base = j.at("base").get<int>();
    r.string_len = j.at("string_len").get<std::size_t>();
    r.x = detail::read_integer(j.at("x"));
    for (const auto& row : j.at("rows")) {
        r.rows.push_back({row.at("string").get<std::string>(), detail::read_integer(row.at("count")),
                          row.at("benford_target").get<double>()});
    }
    r.skipped_zero = detail::read_integer(j.at("skipped_zero"));
    r.skipped_short = detail::read_integer(j.at("skipped_short"));
    r.chi_square = j.at("chi_square").get<double>();
    r.star_discrepancy = j.at("star_discrepancy").get<double>();
    for (const auto& w : j.at("weyl")) {
        r.weyl.push_back({w.at("m").get<long>(), w.at("magnitude").get<double>(),
                          static_cast<std::size_t>(detail::read_integer(w.at("N")))});
    }
    return r;
}

inline void write_csv_header(std::ostream& out) { out << "x,string,count,freq,target\n"; }

// One row per digit string.
inline void write_csv(std::ostream& out, const BenfordReport& r)
{
    for (const auto& row : r.rows) {
        out << r.x << ',' << row.string << ',' << row.count << ',' << std::setprecision(17)
            << r.frequency(row).value() << ',' << row.target << '\n';
    }
}

inline void write_pretty(std::ostream& out, const BenfordReport& r)
{
    out << "sequence " << r.sequence << ", base " << r.base << ", x = " << r.x << " (" << to_string(r.range)
        << ")\n";
    out << std::left << std::setw(12) << "string" << std::setw(10) << "count" << std::setw(12) << "freq"
        << "target\n";
    for (const auto& row : r.rows) {
        std::ostringstream freq;
        std::ostringstream target;
        freq << std::fixed << std::setprecision(6) << r.frequency(row).value();
        target << std::fixed << std::setprecision(6) << row.target;
        out << std::setw(12) << row.string << std::setw(10) << row.count << std::setw(12) << freq.str()
            << target.str() << '\n';
    }
    out << std::right << "skipped: " << r.skipped_zero << " zero, " << r.skipped_short << " short\n";
    out << "chi-square " << r.chi_square << ", star discrepancy " << r.star_discrepancy << '\n';
    for (const auto& w : r.weyl) {
        out << "|S_N(" << w.m << ")| = " << w.magnitude << '\n';
    }
}

}  // namespace benford::udstats

#endif  // BENFORD_REPORT_IO_HPP

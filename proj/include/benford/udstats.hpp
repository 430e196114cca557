#ifndef BENFORD_UDSTATS_HPP
#define BENFORD_UDSTATS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "digits.hpp"
#include "sequences.hpp"

namespace benford::udstats {

/// Which indices "n <= x" covers: {0, ..., x-1} or {1, ..., x}.
enum class RangeConvention { FromZero, FromOne };

inline std::string_view to_string(RangeConvention c)
{
    return c == RangeConvention::FromZero ? "from-zero" : "from-one";
}

inline RangeConvention parse_range_convention(std::string_view s)
{
    if (s == "from-zero") {
        return RangeConvention::FromZero;
    }
    if (s == "from-one") {
        return RangeConvention::FromOne;
    }
    throw Error("unknown range convention: " + std::string(s));
}

struct IndexRange {
    long first;
    long last;  // inclusive
};

inline IndexRange sample_range(RangeConvention c, long x)
{
    detail::require(x >= 1, "sample bound x must be at least 1");
    return c == RangeConvention::FromZero ? IndexRange{0, x - 1} : IndexRange{1, x};
}

/// Exact frequency count / total.
struct Frequency {
    std::uint64_t count = 0;
    std::uint64_t total = 1;

    double value() const noexcept { return static_cast<double>(count) / static_cast<double>(total); }

    // Half-up rounding to `decimals` places, as an integer numerator over 10^decimals.
    std::uint64_t rounded_units(int decimals) const
    {
        const BigInt scale = detail::ipow(10, static_cast<unsigned long>(decimals));
        const BigInt num = BigInt(static_cast<unsigned long>(count)) * scale * 2 + total;
        const BigInt den = BigInt(static_cast<unsigned long>(total)) * 2;
        return BigInt(num / den).get_ui();
    }

    friend bool operator==(const Frequency&, const Frequency&) = default;
};

/// Formats a value of units / 10^decimals with a fixed number of decimals.
inline std::string format_fixed(std::uint64_t units, int decimals, bool leading_zero = true)
{
    std::string digits = std::to_string(units);
    if (static_cast<int>(digits.size()) <= decimals) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    const std::size_t split = digits.size() - static_cast<std::size_t>(decimals);
    std::string whole = digits.substr(0, split);
    if (!leading_zero && whole == "0") {
        whole.clear();
    }
    return decimals > 0 ? whole + "." + digits.substr(split) : whole;
}

/// B(d, x, k; a): fraction of sampled indices whose term starts with d in base k.
/// Zero terms and terms shorter than d never match but stay in the denominator.
inline Frequency benford_b(sequences::IntegerSequence& seq, const digits::DigitQuery& q, long x,
                           RangeConvention convention)
{
    const auto range = sample_range(convention, x);
    detail::require(range.first >= seq.first_index(), "insufficient cached terms");
    seq.ensure(range.last);
    Frequency f{0, static_cast<std::uint64_t>(x)};
    for (long n = range.first; n <= range.last; ++n) {
        const auto& a = seq.at(n);
        if (sgn(a) != 0 && digits::matches(a, q)) {
            ++f.count;
        }
    }
    return f;
}

/// log_k(d + 1) - log_k(d).
inline double benford_target(const digits::DigitQuery& q)
{
    const Real d(q.value().get_mpz_t());
    return (log((d + 1) / d) / log(Real(q.base()))).convert_to<double>();
}

struct ReportRow {
    std::string string;
    std::uint64_t count = 0;
    double target = 0;
    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// sum_d (count_d - x t_d)^2 / (x t_d).
inline double chi_square(std::span<const ReportRow> rows, std::uint64_t x)
{
    detail::require(x >= 1, "sample bound x must be at least 1");
    double s = 0;
    for (const auto& r : rows) {
        detail::require(r.target > 0, "benford target must be positive");
        const double expected = static_cast<double>(x) * r.target;
        const double diff = static_cast<double>(r.count) - expected;
        s += diff * diff / expected;
    }
    return s;
}

/// D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted points.
inline double star_discrepancy(std::span<const double> points)
{
    detail::require(!points.empty(), "star discrepancy needs at least one point");
    std::vector<double> sorted(points.begin(), points.end());
    for (double p : sorted) {
        detail::require(p >= 0.0 && p < 1.0, "point outside [0,1)");
    }
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        d = std::max({d, k / n - sorted[i], sorted[i] - (k - 1) / n});
    }
    return d;
}

struct WeylSum {
    long m = 0;
    double magnitude = 0;
    std::size_t n = 0;
    friend bool operator==(const WeylSum&, const WeylSum&) = default;
};

/// |(1/N) sum_n exp(2 pi i m f(n))|.
inline WeylSum weyl_sum(std::span<const double> values, long m)
{
    detail::require(!values.empty(), "weyl sum needs at least one value");
    detail::require(m != 0, "weyl index must be nonzero");
    long double re = 0;
    long double im = 0;
    for (double v : values) {
        // reduce m v mod 1 before scaling by 2 pi
        long double t = static_cast<long double>(m) * static_cast<long double>(v);
        t -= std::floor(t);
        const long double angle = 2.0L * std::numbers::pi_v<long double> * t;
        re += std::cos(angle);
        im += std::sin(angle);
    }
    const long double nn = static_cast<long double>(values.size());
    const double mag = static_cast<double>(std::hypot(re, im) / nn);
    return {m, std::min(mag, 1.0), values.size()};
}

/// frac(log_k |a(n)|) for the nonzero terms of the sampled range.
inline std::vector<double> log_fractional_parts(sequences::IntegerSequence& seq, int base, long x,
                                                RangeConvention convention)
{
    const auto range = sample_range(convention, x);
    detail::require(range.first >= seq.first_index(), "insufficient cached terms");
    seq.ensure(range.last);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(x));
    for (long n = range.first; n <= range.last; ++n) {
        const auto& a = seq.at(n);
        if (sgn(a) != 0) {
            out.push_back(std::min(digits::log_frac(a, base).value.convert_to<double>(), std::nextafter(1.0, 0.0)));
        }
    }
    return out;
}

struct BenfordReport {
    std::string sequence;
    RangeConvention range = RangeConvention::FromOne;
    int base = 10;
    std::size_t string_len = 1;
    std::uint64_t x = 1;
    std::vector<ReportRow> rows;
    std::uint64_t skipped_zero = 0;
    std::uint64_t skipped_short = 0;
    double chi_square = 0;
    double star_discrepancy = 0;
    std::vector<WeylSum> weyl;

    Frequency frequency(const ReportRow& r) const { return {r.count, x}; }

    friend bool operator==(const BenfordReport&, const BenfordReport&) = default;
};

/// Full report for every len-digit string in base k over the sampled range.
inline BenfordReport build_report(sequences::IntegerSequence& seq, int base, std::size_t len, long x,
                                  RangeConvention convention, long weyl_max_m = 5)
{
    const auto range = sample_range(convention, x);
    detail::require(range.first >= seq.first_index(), "insufficient cached terms");
    seq.ensure(range.last);

    BenfordReport rep;
    rep.sequence = seq.name();
    rep.range = convention;
    rep.base = base;
    rep.string_len = len;
    rep.x = static_cast<std::uint64_t>(x);

    const auto strings = digits::all_strings(base, len);
    const BigInt first_value = strings.front().value();
    for (const auto& q : strings) {
        rep.rows.push_back({q.to_string(), 0, benford_target(q)});
    }
    std::vector<double> points;
    for (long n = range.first; n <= range.last; ++n) {
        const auto& a = seq.at(n);
        if (sgn(a) == 0) {
            ++rep.skipped_zero;
            continue;
        }
        points.push_back(std::min(digits::log_frac(a, base).value.convert_to<double>(), std::nextafter(1.0, 0.0)));
        const auto lead = digits::leading_string(a, base, len);
        if (!lead) {
            ++rep.skipped_short;
            continue;
        }
        BigInt v = 0;
        for (int d : *lead) {
            v = v * base + d;
        }
        ++rep.rows[BigInt(v - first_value).get_ui()].count;
    }
    rep.chi_square = chi_square(rep.rows, rep.x);
    if (!points.empty()) {
        rep.star_discrepancy = star_discrepancy(points);
        for (long m = 1; m <= weyl_max_m; ++m) {
            rep.weyl.push_back(weyl_sum(points, m));
        }
    }
    return rep;
}

}  // namespace benford::udstats

#endif  // BENFORD_UDSTATS_HPP

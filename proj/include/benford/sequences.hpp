#ifndef BENFORD_SEQUENCES_HPP
#define BENFORD_SEQUENCES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "qseries.hpp"

namespace benford::sequences {

/// Memoized p(n) via Euler's pentagonal recurrence
/// p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
class PartitionTable {
public:
    PartitionTable() : values_{BigInt(1)} {}

    // Extends the memo so that p(0..n) are available.
    void extend_to(long n)
    {
        values_.reserve(static_cast<std::size_t>(n) + 1);
        BigInt acc;
        for (long m = static_cast<long>(values_.size()); m <= n; ++m) {
            acc = 0;
            for (long k = 1;; ++k) {
                const long g1 = k * (3 * k - 1) / 2;
                if (g1 > m) {
                    break;
                }
                const long g2 = g1 + k;
                const auto* t1 = values_[static_cast<std::size_t>(m - g1)].get_mpz_t();
                if (k % 2 == 1) {
                    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), t1);
                    if (g2 <= m) {
                        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), values_[static_cast<std::size_t>(m - g2)].get_mpz_t());
                    }
                } else {
                    mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), t1);
                    if (g2 <= m) {
                        mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), values_[static_cast<std::size_t>(m - g2)].get_mpz_t());
                    }
                }
            }
            values_.push_back(acc);
        }
    }

    const BigInt& operator[](long n) const { return values_[static_cast<std::size_t>(n)]; }
    long size() const noexcept { return static_cast<long>(values_.size()); }

private:
    std::vector<BigInt> values_;
};

/// The partition number p(n).
inline BigInt partition_p(long n)
{
    detail::require(n >= 0, "negative index");
    static PartitionTable table;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    table.extend_to(n);
    return table[n];
}

/// Generating function of s-regular partitions, prod (1 - q^(s n)) / (1 - q^n).
inline qseries::TruncatedLaurentSeries regular_partition_series(long s, long prec)
{
    detail::require(s >= 2, "s must be at least 2");
    const auto eta = qseries::eta_series(prec);
    const auto numerator = qseries::eta_series((prec + s - 1) / s).dilated(s).truncated(prec);
    return qseries::series_mul(numerator, qseries::series_inverse(eta));
}

/// b_s(n): partitions of n with no part divisible by s.
inline BigInt regular_partitions_b(long s, long n)
{
    detail::require(s >= 2, "s must be at least 2");
    detail::require(n >= 0, "negative index");
    return regular_partition_series(s, n + 1).coeff(n);
}

/// r_{g,delta}(n): partitions of n into parts congruent to +-g (mod delta).
inline BigInt rg_delta(long g, long delta, long n)
{
    qseries::validate_progression(g, delta);
    detail::require(n >= 0, "negative index");
    return qseries::arithmetic_progression_product_inverse(g, delta, n + 1).coeff(n);
}

/// Brute-force partition counter: walks every non-increasing sequence of
/// admissible parts. Independent of the series and recurrence machinery.
struct PartitionCountOracle {
    static constexpr long default_max_n = 80;

    std::function<bool(long)> part_filter = [](long) { return true; };
    long max_n = default_max_n;

    BigInt count(long n) const
    {
        detail::require(n >= 0, "negative index");
        detail::require(n <= max_n, "oracle bound exceeded");
        std::vector<long> parts;
        for (long k = n; k >= 1; --k) {
            if (part_filter(k)) {
                parts.push_back(k);
            }
        }
        std::uint64_t total = 0;
        walk(parts, 0, n, total);
        return BigInt(static_cast<unsigned long>(total));
    }

private:
    // parts is sorted descending; from index i onward every part is <= the last one used.
    static void walk(const std::vector<long>& parts, std::size_t i, long remaining, std::uint64_t& total)
    {
        if (remaining == 0) {
            ++total;
            return;
        }
        for (std::size_t j = i; j < parts.size(); ++j) {
            if (parts[j] <= remaining) {
                walk(parts, j, remaining - parts[j], total);
            }
        }
    }
};

inline BigInt oracle_count(std::function<bool(long)> filter, long n, long max_n = PartitionCountOracle::default_max_n)
{
    return PartitionCountOracle{std::move(filter), max_n}.count(n);
}

/// Indexed integer terms a(first_index), a(first_index + 1), ... computed on
/// demand by an extender and cached. Fill is single-writer; reads of filled
/// terms are safe to share.
class IntegerSequence {
public:
    // Appends or replaces terms so that at least `count` terms are cached.
    using Extender = std::function<void(std::vector<BigInt>& terms, std::size_t count)>;

    IntegerSequence(std::string name, long first_index, Extender extender)
        : name_(std::move(name)), first_index_(first_index), extender_(std::move(extender))
    {
    }

    const std::string& name() const noexcept { return name_; }
    long first_index() const noexcept { return first_index_; }
    long last_cached_index() const noexcept { return first_index_ + static_cast<long>(terms_.size()) - 1; }

    // Makes every index up to and including `last` available.
    void ensure(long last)
    {
        if (last <= last_cached_index()) {
            return;
        }
        detail::require(static_cast<bool>(extender_), "insufficient cached terms");
        const auto count = static_cast<std::size_t>(last - first_index_ + 1);
        extender_(terms_, count);
        detail::require(terms_.size() >= count, "insufficient cached terms");
    }

    const BigInt& at(long n) const
    {
        detail::require(n >= first_index_ && n <= last_cached_index(), "insufficient cached terms");
        return terms_[static_cast<std::size_t>(n - first_index_)];
    }

    const BigInt& operator()(long n)
    {
        detail::require(n >= first_index_, "index below first term");
        ensure(n);
        return at(n);
    }

    const std::vector<BigInt>& cached_terms() const noexcept { return terms_; }

private:
    std::string name_;
    long first_index_;
    Extender extender_;
    std::vector<BigInt> terms_;
};

/// A sequence whose terms are coefficients of a series produced at a requested
/// precision. The series is recomputed with geometric growth when extended.
inline IntegerSequence series_sequence(std::string name, long first_index,
                                       std::function<qseries::TruncatedLaurentSeries(long prec)> make)
{
    auto extender = [first_index, make = std::move(make)](std::vector<BigInt>& terms, std::size_t count) {
        const std::size_t target = std::max(count, terms.size() * 2);
        const long prec = first_index + static_cast<long>(target);
        const auto series = make(prec);
        std::vector<BigInt> fresh;
        fresh.reserve(target);
        for (long n = first_index; n < prec; ++n) {
            fresh.push_back(series.coeff(n));
        }
        terms = std::move(fresh);
    };
    return IntegerSequence(std::move(name), first_index, std::move(extender));
}

/// Fixed view of the coefficients of q^first .. q^last in `source`.
inline IntegerSequence sequence_from_series(const qseries::TruncatedLaurentSeries& source, long first, long last,
                                            std::string name = "coeffs")
{
    detail::require(first <= last, "empty range");
    detail::require(last < source.prec(), "range exceeds precision");
    std::vector<BigInt> values;
    for (long n = first; n <= last; ++n) {
        values.push_back(source.coeff(n));
    }
    auto extender = [values = std::move(values)](std::vector<BigInt>& terms, std::size_t count) {
        detail::require(count <= values.size(), "range exceeds precision");
        terms = values;
    };
    IntegerSequence seq(std::move(name), first, std::move(extender));
    seq.ensure(last);
    return seq;
}

inline IntegerSequence partition_sequence()
{
    auto table = std::make_shared<PartitionTable>();
    return IntegerSequence("p", 0, [table](std::vector<BigInt>& terms, std::size_t count) {
        table->extend_to(static_cast<long>(count) - 1);
        for (auto n = static_cast<long>(terms.size()); n < static_cast<long>(count); ++n) {
            terms.push_back((*table)[n]);
        }
    });
}

inline IntegerSequence regular_partition_sequence(long s)
{
    detail::require(s >= 2, "s must be at least 2");
    return series_sequence("b_s:" + std::to_string(s), 0, [s](long prec) { return regular_partition_series(s, prec); });
}

inline IntegerSequence rg_delta_sequence(long g, long delta)
{
    qseries::validate_progression(g, delta);
    return series_sequence("r:" + std::to_string(g) + "," + std::to_string(delta), 0, [g, delta](long prec) {
        return qseries::arithmetic_progression_product_inverse(g, delta, prec);
    });
}

inline IntegerSequence j_e4_cubed_sequence()
{
    return series_sequence("jE4cubed", -1, [](long prec) { return qseries::j_times_e4_cubed(prec); });
}

inline IntegerSequence rogers_ramanujan_sequence(int a)
{
    return series_sequence("rr_sum:" + std::to_string(a), 0,
                           [a](long prec) { return qseries::rogers_ramanujan_sum_side(a, prec); });
}

// Index n is the coefficient of q^n of the series part; when 24 | offset24 the
// prefactor is folded in so that n is the true exponent.
inline IntegerSequence eta_quotient_sequence(const qseries::EtaQuotientSpec& spec, std::string name)
{
    const long offset = spec.prefactor_numerator();
    const long shift = offset % 24 == 0 ? offset / 24 : 0;
    return series_sequence(std::move(name), shift, [spec, shift](long prec) {
        return qseries::eta_quotient_series(spec, std::max(1L, prec - shift)).series.shifted(shift);
    });
}

/// On-disk cache: one decimal value per line, line number = index - first_index.
inline void write_sequence_cache(const IntegerSequence& seq, const std::string& path)
{
    std::ofstream out(path);
    detail::require(static_cast<bool>(out), "cannot open cache file for writing");
    for (const auto& t : seq.cached_terms()) {
        out << t.get_str() << '\n';
    }
    detail::require(static_cast<bool>(out), "failed writing cache file");
}

inline std::vector<BigInt> read_sequence_cache(const std::string& path)
{
    std::ifstream in(path);
    detail::require(static_cast<bool>(in), "cannot open cache file");
    std::vector<BigInt> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        BigInt v;
        detail::require(v.set_str(line, 10) == 0, "malformed cache line");
        values.push_back(std::move(v));
    }
    return values;
}

}  // namespace benford::sequences

#endif  // BENFORD_SEQUENCES_HPP

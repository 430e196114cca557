#include <chrono>
#include <filesystem>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <benford/sequences.hpp>

#include "oracles.hpp"

using namespace benford;
using namespace benford::sequences;

TEST(PartitionP, SmallValues)
{
    EXPECT_EQ(partition_p(0), 1);
    EXPECT_EQ(partition_p(4), 5);
    EXPECT_EQ(partition_p(10), 42);
    EXPECT_EQ(partition_p(100), BigInt("190569292"));
    try {
        (void)partition_p(-1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "negative index");
    }
}

TEST(PartitionP, MatchesExhaustiveEnumeration)
{
    for (long n = 0; n <= 60; ++n) {
        EXPECT_EQ(partition_p(n), oracle_count([](long) { return true; }, n)) << n;
    }
}

TEST(PartitionP, MatchesInverseEtaProduct)
{
    const auto inv = qseries::series_inverse(qseries::eta_series(501));
    for (long n = 0; n <= 500; ++n) {
        ASSERT_EQ(partition_p(n), inv.coeff(n)) << n;
    }
}

TEST(PartitionP, RecurrenceReachesHundredThousand)
{
    PartitionTable table;
    const auto start = std::chrono::steady_clock::now();
    table.extend_to(100000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(secs, 30.0);
    // p(10^5) has 347 decimal digits and begins 27493510569775696512...
    EXPECT_EQ(table[100000].get_str().size(), 347U);
    EXPECT_EQ(table[100000].get_str().substr(0, 20), "27493510569775696512");
}

TEST(RegularPartitions, SmallValues)
{
    EXPECT_EQ(regular_partitions_b(2, 5), 3);
    EXPECT_EQ(regular_partitions_b(3, 3), 2);
    EXPECT_EQ(regular_partitions_b(7, 0), 1);
    EXPECT_THROW((void)regular_partitions_b(1, 4), Error);
}

TEST(RegularPartitions, MatchFilteredEnumeration)
{
    for (long s : {2L, 3L, 5L, 7L}) {
        const auto series = regular_partition_series(s, 51);
        for (long n = 0; n <= 50; ++n) {
            EXPECT_EQ(series.coeff(n), oracle_count([s](long part) { return part % s != 0; }, n)) << s << " " << n;
        }
    }
}

TEST(RegularPartitions, EulerDistinctPartsIdentity)
{
    for (long n = 0; n <= 40; ++n) {
        EXPECT_EQ(regular_partitions_b(2, n), oracle::distinct_parts(n, n)) << n;
    }
}

TEST(RegularPartitions, ShiftedEtaQuotientCoefficients)
{
    for (long s : {2L, 3L}) {
        const auto seq_series =
            qseries::eta_quotient_series(qseries::EtaQuotientSpec({{24, -1}, {24 * s, 1}}), 24 * 21).folded();
        auto source = sequence_from_series(seq_series, seq_series.lead(), seq_series.prec() - 1);
        for (long n = 0; n <= 20; ++n) {
            EXPECT_EQ(source.at(24 * n + s - 1), regular_partitions_b(s, n)) << s << " " << n;
        }
    }
}

TEST(RgDelta, SmallValues)
{
    EXPECT_EQ(rg_delta(1, 5, 4), 2);
    EXPECT_EQ(rg_delta(2, 5, 7), 2);
    EXPECT_EQ(rg_delta(3, 7, 0), 1);
    EXPECT_THROW((void)rg_delta(3, 5, 2), Error);
}

TEST(RgDelta, MatchFilteredEnumeration)
{
    const std::vector<std::pair<long, long>> params{{1, 5}, {2, 5}, {1, 7}, {2, 7}, {3, 7}};
    for (auto [g, delta] : params) {
        auto seq = rg_delta_sequence(g, delta);
        seq.ensure(50);
        for (long n = 0; n <= 50; ++n) {
            const auto filter = [g = g, delta = delta](long part) {
                const long r = part % delta;
                return r == g || r == delta - g;
            };
            EXPECT_EQ(seq.at(n), oracle_count(filter, n)) << g << "," << delta << " n=" << n;
        }
    }
}

TEST(Oracle, BasicCountsAndBound)
{
    EXPECT_EQ(oracle_count([](long) { return true; }, 4), 5);
    EXPECT_EQ(oracle_count([](long part) { return part % 2 == 1; }, 5), 3);
    EXPECT_EQ(oracle_count([](long) { return false; }, 0), 1);
    try {
        (void)oracle_count([](long) { return true; }, 81);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "oracle bound exceeded");
    }
}

TEST(IntegerSequence, SeriesSourcesAndRanges)
{
    auto m = j_e4_cubed_sequence();
    EXPECT_EQ(m.first_index(), -1);
    EXPECT_EQ(m(-1), 1);
    EXPECT_EQ(m(0), 1464);
    EXPECT_EQ(m(2), 313589120);

    const auto zero = qseries::TruncatedLaurentSeries::zero(0, 6);
    const auto z = sequence_from_series(zero, 0, 5, "zero");
    for (long n = 0; n <= 5; ++n) {
        EXPECT_EQ(z.at(n), 0);
    }
    try {
        (void)sequence_from_series(zero, 0, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "range exceeds precision");
    }
}

TEST(IntegerSequence, DeterministicAcrossRecomputation)
{
    auto a = regular_partition_sequence(3);
    auto b = regular_partition_sequence(3);
    a.ensure(10);
    a.ensure(300);  // forces a regrowth of the cache
    b.ensure(300);
    for (long n = 0; n <= 300; ++n) {
        ASSERT_EQ(a.at(n), b.at(n));
    }
    EXPECT_EQ(a.name(), "b_s:3");
    EXPECT_THROW((void)a.at(-1), Error);
}

TEST(IntegerSequence, RogersRamanujanAndEtaQuotientSelectors)
{
    auto rr = rogers_ramanujan_sequence(1);
    auto r25 = rg_delta_sequence(2, 5);
    rr.ensure(80);
    r25.ensure(80);
    for (long n = 0; n <= 80; ++n) {
        EXPECT_EQ(rr.at(n), r25.at(n));
    }

    auto eq = eta_quotient_sequence(qseries::EtaQuotientSpec({{1, -1}}), "eta_quotient:1^-1");
    // offset 24 * (-1/24) is fractional: indices follow the product part
    EXPECT_EQ(eq.first_index(), 0);
    EXPECT_EQ(eq(10), 42);

    auto delta = eta_quotient_sequence(qseries::EtaQuotientSpec({{1, 24}}), "eta_quotient:1^24");
    EXPECT_EQ(delta.first_index(), 1);
    EXPECT_EQ(delta(2), -24);
}

TEST(SequenceCache, RoundTripsThroughDisk)
{
    auto p = partition_sequence();
    p.ensure(200);
    const auto path = (std::filesystem::temp_directory_path() / "benford_p_cache.txt").string();
    write_sequence_cache(p, path);
    const auto values = read_sequence_cache(path);
    std::filesystem::remove(path);
    EXPECT_EQ(values, p.cached_terms());
}

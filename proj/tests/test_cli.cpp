#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <benford/cli.hpp>
#include <benford/report_io.hpp>

#include "printed_tables.hpp"

using namespace benford;

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir {
public:
    TempDir()
    {
        std::string templ = (fs::temp_directory_path() / "benford_cli_XXXXXX").string();
        path_ = mkdtemp(templ.data());
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

RunResult run_cli(const std::string& args)
{
    TempDir dir;
    const auto out = dir.path() / "stdout";
    const auto err = dir.path() / "stderr";
    const std::string cmd =
        std::string("\"") + BENFORD_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        v.push_back(line);
    }
    return v;
}

}  // namespace

TEST(Selectors, KnownSequences)
{
    EXPECT_EQ(cli::make_sequence("p")(10), 42);
    EXPECT_EQ(cli::make_sequence("b_s:2")(5), 3);
    EXPECT_EQ(cli::make_sequence("r:1,5")(4), 2);
    EXPECT_EQ(cli::make_sequence("rr_sum:0")(4), 2);
    EXPECT_EQ(cli::make_sequence("jE4cubed")(0), 1464);
    EXPECT_EQ(cli::make_sequence("eta_quotient:1^24")(2), -24);
    EXPECT_EQ(cli::make_sequence("eta_quotient:24^-1,48^1")(24 * 5 + 1), 3);
}

TEST(Selectors, ParseEtaQuotient)
{
    const auto spec = cli::parse_eta_quotient("24^-1,48^1");
    ASSERT_EQ(spec.terms().size(), 2U);
    EXPECT_EQ(spec.terms()[0].delta, 24);
    EXPECT_EQ(spec.terms()[0].r, -1);
    EXPECT_EQ(spec.terms()[1].delta, 48);
    EXPECT_EQ(spec.terms()[1].r, 1);
    // a bare delta carries exponent 1
    EXPECT_EQ(cli::parse_eta_quotient("2").terms()[0].r, 1);
}

TEST(Selectors, UsageErrors)
{
    for (const char* bad : {"", "q", "p:3", "b_s:1", "b_s:x", "b_s:", "r:3,5", "r:1", "r:0,5", "rr_sum:2",
                            "eta_quotient:", "eta_quotient:24^0", "eta_quotient:24^", "eta_quotient:2^1,2^3",
                            "jE4cubed:1"}) {
        EXPECT_THROW((void)cli::make_sequence(bad), cli::UsageError) << "[" << bad << "]";
    }
}

TEST(Tables, FirstTableUnderFromOne)
{
    const auto& t = cli::paper_table(1);
    EXPECT_TRUE(printed::mismatches(t, cli::compute_table(t, udstats::RangeConvention::FromOne)).empty());
}

TEST(Tables, FromZeroDoesNotReproduceFirstTable)
{
    EXPECT_FALSE(printed::mismatches(cli::paper_table(1), cli::compute_table(cli::paper_table(1), udstats::RangeConvention::FromZero)).empty());
}

TEST(Tables, SecondTableDiffersOnlyAtOneUnreachableCell)
{
    const auto& t = cli::paper_table(2);
    const auto bad = printed::mismatches(t, cli::compute_table(t, udstats::RangeConvention::FromOne));
    const std::set<printed::Cell> expected{{1, 2}};  // x = 400, d = 110
    EXPECT_EQ(bad, expected);
    // 0.209 needs a count in [83.6, 84.0) out of 400; no integer lies there
    for (std::uint64_t count = 0; count <= 400; ++count) {
        EXPECT_NE(udstats::format_fixed((udstats::Frequency{count, 400}).rounded_units(3), 3), "0.209");
    }
    const auto cells = cli::compute_table(t, udstats::RangeConvention::FromOne);
    EXPECT_EQ(cells[1][2].count, 83U);
}

TEST(Tables, ThirdTableUnderFromOne)
{
    const auto& t = cli::paper_table(3);
    EXPECT_TRUE(printed::mismatches(t, cli::compute_table(t, udstats::RangeConvention::FromOne)).empty());
}

TEST(Tables, RenderedTextIsStable)
{
    const auto& t = cli::paper_table(1);
    const auto conv = cli::table_convention;
    const auto first = cli::render_table(t, cli::compute_table(t, conv), conv);
    const auto second = cli::render_table(t, cli::compute_table(t, conv), conv);
    EXPECT_EQ(first, second);
    const std::string expected = "Table 1: B(d,x,10;p(n))  [n in from-one range]\n"
                                 "x\td=1\td=2\td=3\td=4\td=5\td=6\td=7\td=8\td=9\n"
                                 "100\t0.33\t0.16\t0.14\t0.09\t0.07\t0.06\t0.07\t0.05\t0.03\n"
                                 "1000\t0.305\t0.177\t0.127\t0.094\t0.076\t0.068\t0.057\t0.052\t0.044\n"
                                 "10000\t0.302\t0.177\t0.126\t0.096\t0.078\t0.067\t0.057\t0.051\t0.046\n"
                                 "inf?\t0.301\t0.176\t0.125\t0.097\t0.079\t0.067\t0.058\t0.051\t0.046\n";
    EXPECT_EQ(first, expected);
    EXPECT_THROW((void)cli::paper_table(4), cli::UsageError);
}

TEST(Binary, ComputePartitions)
{
    const auto r = run_cli("compute p 4");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 6U);
    EXPECT_EQ(lines.front(), "n,value");
    EXPECT_EQ(lines[1], "0,1");
    EXPECT_EQ(lines.back(), "4,5");
}

TEST(Binary, ComputeStartsAtFirstIndex)
{
    const auto r = run_cli("compute jE4cubed 2");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::vector<std::string> expected{"n,value", "-1,1", "0,1464", "1,911844", "2,313589120"};
    EXPECT_EQ(lines_of(r.out), expected);
}

TEST(Binary, TableMatchesLibraryRendering)
{
    const auto r = run_cli("table 3");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto& t = cli::paper_table(3);
    EXPECT_EQ(r.out, cli::render_table(t, cli::compute_table(t, cli::table_convention), cli::table_convention));
    EXPECT_EQ(run_cli("table 3").out, r.out);
}

TEST(Binary, UsageErrorsExitTwo)
{
    for (const char* args : {"", "bogus", "compute", "compute q 3", "compute p x", "compute jE4cubed -5", "table 4",
                             "table", "report --seq p --base 10 --x 100",
                             "report --seq p --base 10 --string 1 --len 1 --x 100",
                             "report --seq p --base 10 --len 1 --x 100,50",
                             "report --seq p --base 10 --len 1 --x 0",
                             "report --seq p --base 10 --len 1 --x 100 --range middle",
                             "report --seq p --base 1 --len 1 --x 100",
                             "report --seq p --base 2 --string 12 --x 100",
                             "report --seq p --base 10 --len 1 --x 100 --format xml",
                             "report --seq nope --base 10 --len 1 --x 100"}) {
        const auto r = run_cli(args);
        EXPECT_EQ(r.code, 2) << args << "\n" << r.err;
    }
}

TEST(Binary, HelpExitsZero)
{
    const auto r = run_cli("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("compute"), std::string::npos);
}

TEST(Binary, RuntimeErrorsExitOne)
{
    const auto r = run_cli("compute p 5 --out /nonexistent-dir/sub/p.csv");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Binary, OutWritesAtomically)
{
    TempDir dir;
    const auto target = dir.path() / "report.csv";
    {
        std::ofstream(target) << "stale contents\n";
    }
    const auto stdout_run = run_cli("report --seq p --base 10 --len 1 --x 100,1000 --format csv");
    ASSERT_EQ(stdout_run.code, 0);
    const auto file_run =
        run_cli("report --seq p --base 10 --len 1 --x 100,1000 --format csv --out \"" + target.string() + "\"");
    ASSERT_EQ(file_run.code, 0) << file_run.err;
    EXPECT_TRUE(file_run.out.empty());
    EXPECT_EQ(slurp(target), stdout_run.out);
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path())) {
        ++entries;
    }
    EXPECT_EQ(entries, 1U);
}

TEST(Binary, CsvReportLayout)
{
    const auto r = run_cli("report --seq p --base 10 --len 1 --x 100,1000 --format csv");
    ASSERT_EQ(r.code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 1U + 9U + 9U);
    EXPECT_EQ(lines[0], "x,string,count,freq,target");
    EXPECT_EQ(lines[1].substr(0, 9), "100,1,33,");
    EXPECT_EQ(lines[10].substr(0, 11), "1000,1,305,");
    for (const auto& line : lines) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
    }
}

TEST(Binary, JsonReportRoundTrips)
{
    const auto r = run_cli("report --seq p --base 2 --len 3 --x 200,400 --range from-one --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 2U);
    auto p = sequences::partition_sequence();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto parsed = udstats::report_from_json(nlohmann::json::parse(lines[i]));
        const auto direct = udstats::build_report(p, 2, 3, i == 0 ? 200 : 400, udstats::RangeConvention::FromOne);
        EXPECT_EQ(parsed, direct);
        EXPECT_EQ(udstats::to_json(parsed).dump(), lines[i]);
    }
}

TEST(Binary, StringFilterKeepsOneRow)
{
    const auto r = run_cli("report --seq jE4cubed --base 3 --string 10 --x 500 --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rep = udstats::report_from_json(nlohmann::json::parse(r.out));
    ASSERT_EQ(rep.rows.size(), 1U);
    EXPECT_EQ(rep.rows[0].string, "10");
    EXPECT_EQ(udstats::format_fixed(rep.frequency(rep.rows[0]).rounded_units(4), 4, false), ".2440");
}

TEST(Binary, PrettyReportMentionsStatistics)
{
    const auto r = run_cli("report --seq b_s:3 --base 10 --len 1 --x 500");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(r.out.empty());
    EXPECT_NE(r.out.find("b_s:3"), std::string::npos);
}

// Command-line front end: compute sequences, reproduce the digit tables,
// and write Benford / equidistribution reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <benford/benford.hpp>
#include <benford/cli.hpp>

namespace {

namespace fs = std::filesystem;
using namespace benford;

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

// Writes to a sibling temp file and renames it over the destination.
void write_atomically(const std::string& path, const std::string& content)
{
    const fs::path dest(path);
    fs::path tmp = dest;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open '" + tmp.string() + "' for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw Error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move output into '" + path + "': " + ec.message());
    }
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_atomically(out_path, content);
    }
}

std::string run_compute(const std::string& selector, long n_max)
{
    auto seq = cli::make_sequence(selector);
    if (n_max < seq.first_index()) {
        throw cli::UsageError("n_max is below the first index of " + selector);
    }
    seq.ensure(n_max);
    std::ostringstream out;
    out << "n,value\n";
    for (long n = seq.first_index(); n <= n_max; ++n) {
        out << n << ',' << seq.at(n).get_str() << '\n';
    }
    return out.str();
}

std::string run_table(int which)
{
    const auto& table = cli::paper_table(which);
    const auto cells = cli::compute_table(table, cli::table_convention);
    return cli::render_table(table, cells, cli::table_convention);
}

struct ReportOptions {
    std::string selector;
    int base = 10;
    std::string digit_string;
    std::size_t length = 0;
    std::vector<long> xs;
    std::string range = "from-one";
    std::string format = "pretty";
    std::string out;
};

std::string run_report(const ReportOptions& opt)
{
    if (opt.base < 2) {
        throw cli::UsageError("base must be at least 2");
    }
    std::optional<digits::DigitQuery> query;
    std::size_t len = opt.length;
    if (!opt.digit_string.empty()) {
        try {
            query = digits::DigitQuery::parse(opt.base, opt.digit_string);
        } catch (const Error& e) {
            throw cli::UsageError(e.what());
        }
        len = query->length();
    }
    if (len == 0) {
        throw cli::UsageError("one of --string or --len is required");
    }
    if (opt.xs.empty()) {
        throw cli::UsageError("--x needs at least one bound");
    }
    for (std::size_t i = 0; i < opt.xs.size(); ++i) {
        if (opt.xs[i] < 1 || (i > 0 && opt.xs[i] <= opt.xs[i - 1])) {
            throw cli::UsageError("--x bounds must be positive and ascending");
        }
    }
    udstats::RangeConvention convention{};
    try {
        convention = udstats::parse_range_convention(opt.range);
    } catch (const Error& e) {
        throw cli::UsageError(e.what());
    }

    auto seq = cli::make_sequence(opt.selector);
    seq.ensure(udstats::sample_range(convention, opt.xs.back()).last);

    std::ostringstream out;
    if (opt.format == "csv") {
        udstats::write_csv_header(out);
    }
    for (long x : opt.xs) {
        auto report = udstats::build_report(seq, opt.base, len, x, convention);
        if (query) {
            const auto keep = query->to_string();
            std::erase_if(report.rows, [&](const udstats::ReportRow& r) { return r.string != keep; });
        }
        if (opt.format == "json") {
            out << udstats::to_json(report).dump() << '\n';
        } else if (opt.format == "csv") {
            udstats::write_csv(out, report);
        } else {
            udstats::write_pretty(out, report);
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Leading-digit statistics for partition functions and modular-form coefficients"};
    app.require_subcommand(1);

    std::string compute_selector;
    long compute_n_max = 0;
    std::string compute_out;
    auto* compute = app.add_subcommand("compute", "Print a(n) for n from the first index up to n_max");
    compute->add_option("selector", compute_selector, "p, b_s:<s>, r:<g>,<delta>, eta_quotient:<spec>, jE4cubed, rr_sum:<a>")
        ->required();
    compute->add_option("n_max", compute_n_max, "Last index to print")->required();
    compute->add_option("--out", compute_out, "Output file (default stdout)");

    int table_id = 0;
    std::string table_out;
    auto* table = app.add_subcommand("table", "Recompute one of the three digit-frequency tables");
    table->add_option("which", table_id, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    table->add_option("--out", table_out, "Output file (default stdout)");

    ReportOptions ropt;
    auto* report = app.add_subcommand("report", "Benford frequencies, chi-square, discrepancy and Weyl sums");
    report->add_option("--seq", ropt.selector, "Sequence selector")->required();
    report->add_option("--base", ropt.base, "Digit base k >= 2")->required();
    auto* string_opt = report->add_option("--string", ropt.digit_string, "Leading digit string d");
    auto* len_opt = report->add_option("--len", ropt.length, "Digit string length L (all strings of that length)");
    string_opt->excludes(len_opt);
    report->add_option("--x", ropt.xs, "Comma-separated ascending sample bounds")->required()->delimiter(',');
    report->add_option("--range", ropt.range, "from-zero or from-one")
        ->check(CLI::IsMember({"from-zero", "from-one"}));
    report->add_option("--format", ropt.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    report->add_option("--out", ropt.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*compute) {
            emit(compute_out, run_compute(compute_selector, compute_n_max));
        } else if (*table) {
            emit(table_out, run_table(table_id));
        } else if (*report) {
            emit(ropt.out, run_report(ropt));
        }
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_ok;
}

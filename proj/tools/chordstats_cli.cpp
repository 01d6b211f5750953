// Command line front end: every computation in the library, emitted as CSV
// (default) or JSON. Exact values are rendered as integer / "num/den"
// strings; approximate values are decimals and never share a column with
// exact ones.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordstats/analysis.hpp"
#include "chordstats/exact.hpp"
#include "chordstats/oracle.hpp"
#include "chordstats/rng.hpp"
#include "chordstats/series.hpp"

namespace {

using chordstats::Int;
using chordstats::Rat;
using chordstats::StatKind;
using nlohmann::json;

constexpr const char *kSchemaVersion = "1";

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
    double timing_ms = 0.0;

    void param(const std::string &key, const std::string &value) {
        parameters.emplace_back(key, value);
    }
    void param(const std::string &key, long long value) {
        parameters.emplace_back(key, std::to_string(value));
    }
    void meta(const std::string &key, const std::string &value) {
        metadata.emplace_back(key, value);
    }
    void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

void write_csv(std::ostream &os, const OutputRecord &rec) {
    os << "# schema_version=" << kSchemaVersion << "\n";
    os << "# command=" << rec.command << "\n";
    for (const auto &[k, v] : rec.parameters) os << "# param:" << k << "=" << v << "\n";
    for (const auto &[k, v] : rec.metadata) os << "# meta:" << k << "=" << v << "\n";
    os << "# meta:timing_ms=" << format_double(rec.timing_ms) << "\n";
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
        os << rec.columns[i] << (i + 1 < rec.columns.size() ? "," : "");
    os << "\n";
    for (const auto &r : rec.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << r[i] << (i + 1 < r.size() ? "," : "");
        os << "\n";
    }
}

void write_json(std::ostream &os, const OutputRecord &rec) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = rec.command;
    doc["parameters"] = json::object();
    for (const auto &[k, v] : rec.parameters) doc["parameters"][k] = v;
    doc["metadata"] = json::object();
    for (const auto &[k, v] : rec.metadata) doc["metadata"][k] = v;
    doc["metadata"]["timing_ms"] = rec.timing_ms;
    doc["rows"] = json::array();
    for (const auto &r : rec.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < r.size() && i < rec.columns.size(); ++i)
            obj[rec.columns[i]] = r[i];
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << "\n";
}

struct CommonOptions {
    std::string format = "csv";
};

void emit(const OutputRecord &rec, const CommonOptions &common) {
    if (common.format == "json")
        write_json(std::cout, rec);
    else
        write_csv(std::cout, rec);
}

StatKind parse_stat(const std::string &text) { return chordstats::stat_from_symbol(text); }

std::string sym(StatKind s) { return std::string(1, chordstats::stat_symbol(s)); }

std::vector<StatKind> stats_or_all(const std::string &text) {
    if (text.empty()) return {chordstats::kAllStats.begin(), chordstats::kAllStats.end()};
    return {parse_stat(text)};
}

// ---- subcommands ----------------------------------------------------------

void run_count(const std::string &stat_text, int n, std::optional<int> p,
               OutputRecord &rec) {
    StatKind stat = parse_stat(stat_text);
    rec.param("stat", sym(stat));
    rec.param("n", n);
    if (p) {
        rec.param("p", *p);
        rec.columns = {"count"};
        rec.row({chordstats::to_string(chordstats::exact::count_stat(stat, n, *p))});
    } else {
        chordstats::CountTable row = chordstats::exact::count_row(stat, n);
        std::vector<std::string> cells;
        for (int i = 0; i < n; ++i) {
            rec.columns.push_back("p" + std::to_string(i));
            cells.push_back(chordstats::to_string(row.counts[i]));
        }
        rec.row(std::move(cells));
    }
}

void run_table(const std::string &stat_text, int n_max, OutputRecord &rec) {
    rec.param("stat", stat_text.empty() ? "all" : stat_text);
    rec.param("n_max", n_max);
    rec.columns = {"stat", "n", "p", "count"};
    for (StatKind stat : stats_or_all(stat_text)) {
        for (int n = 1; n <= n_max; ++n) {
            chordstats::CountTable row = chordstats::exact::count_row(stat, n);
            for (int p = 0; p < n; ++p)
                rec.row({sym(stat), std::to_string(n), std::to_string(p),
                         chordstats::to_string(row.counts[p])});
        }
    }
}

void run_dist(const std::string &stat_text, int n, bool normalize, OutputRecord &rec) {
    StatKind stat = parse_stat(stat_text);
    rec.param("stat", sym(stat));
    rec.param("n", n);
    rec.param("normalize", normalize ? "true" : "false");
    if (normalize) {
        chordstats::analysis::ExactDistribution dist =
            chordstats::analysis::exact_distribution(stat, n);
        rec.columns = {"p", "probability", "decimal"};
        for (int p = 0; p < n; ++p)
            rec.row({std::to_string(p), chordstats::to_string(dist.probs[p]),
                     format_double(chordstats::to_double(dist.probs[p]))});
    } else {
        chordstats::CountTable row = chordstats::exact::count_row(stat, n);
        rec.columns = {"p", "count"};
        for (int p = 0; p < n; ++p)
            rec.row({std::to_string(p), chordstats::to_string(row.counts[p])});
    }
}

void run_moments(const std::string &stat_text, int n, int m, OutputRecord &rec) {
    StatKind stat = parse_stat(stat_text);
    rec.param("stat", sym(stat));
    rec.param("n", n);
    rec.param("m", m);
    chordstats::analysis::MomentReport report = chordstats::analysis::moment_report(stat, n, m);
    rec.columns = {"m", "factorial_moment", "mean", "variance"};
    rec.row({std::to_string(m), chordstats::to_string(report.factorial_moment),
             chordstats::to_string(report.mean), chordstats::to_string(report.variance)});
}

void run_asym(const std::string &stat_text, int points, bool cdf, OutputRecord &rec) {
    StatKind stat = parse_stat(stat_text);
    if (points < 2) throw std::invalid_argument("--points must be >= 2");
    rec.param("stat", sym(stat));
    rec.param("points", points);
    rec.param("kind", cdf ? "cdf" : "density");
    rec.columns = {"x", cdf ? "cdf" : "density"};
    for (int i = 0; i < points; ++i) {
        double x = static_cast<double>(i) / (points - 1);
        double v = cdf ? chordstats::analysis::asymptotic_cdf(stat, x)
                       : chordstats::analysis::asymptotic_density(stat, x);
        rec.row({format_double(x), format_double(v)});
    }
}

void run_gf(const std::string &stat_text, int order, OutputRecord &rec) {
    StatKind stat = parse_stat(stat_text);
    rec.param("stat", sym(stat));
    rec.param("order", order);
    chordstats::series::TruncatedSeries gf = chordstats::series::build_gf(stat, order);
    rec.columns = {"n", "p", "count"};
    for (int n = 1; n <= order; ++n)
        for (int p = 0; p < n; ++p)
            rec.row({std::to_string(n), std::to_string(p),
                     chordstats::to_string(chordstats::series::gf_coefficient(gf, n, p))});
}

// Returns false on cross-route disagreement.
bool run_oracle(int n, bool allow_large, int threads, OutputRecord &rec) {
    rec.param("n", n);
    rec.param("threads", threads);
    rec.param("allow_large", allow_large ? "true" : "false");
    chordstats::oracle::EnumerationResult res =
        chordstats::oracle::enumerate_counts(n, allow_large, threads);
    rec.columns = {"stat", "p", "oracle_count", "exact_count", "agree"};
    bool all_agree = true;
    for (const chordstats::CountTable &table : res.tables) {
        chordstats::CountTable expected = chordstats::exact::count_row(table.stat, n);
        for (int p = 0; p < n; ++p) {
            bool agree = table.counts[p] == expected.counts[p];
            all_agree = all_agree && agree;
            rec.row({sym(table.stat), std::to_string(p), chordstats::to_string(table.counts[p]),
                     chordstats::to_string(expected.counts[p]), agree ? "true" : "false"});
        }
    }
    rec.meta("configurations", chordstats::to_string(res.configurations));
    rec.meta("partition_violations", std::to_string(res.partition_violations));
    rec.meta("agreement", all_agree ? "true" : "false");
    return all_agree && res.partition_violations == 0;
}

void run_sample(int n, std::uint64_t reps, std::uint64_t seed, OutputRecord &rec) {
    rec.param("n", n);
    rec.param("reps", static_cast<long long>(reps));
    rec.param("seed", static_cast<long long>(seed));
    chordstats::oracle::MonteCarloResult res = chordstats::oracle::monte_carlo(n, reps, seed);
    rec.columns = {"stat", "p", "count", "frequency", "std_error"};
    for (const auto &dist : res.distributions) {
        for (int p = 0; p < n; ++p)
            rec.row({sym(dist.stat), std::to_string(p), std::to_string(dist.counts[p]),
                     format_double(dist.frequency[p]), format_double(dist.std_error[p])});
    }
    rec.meta("rng_algorithm", chordstats::kRngAlgorithm);
    rec.meta("rng_version", chordstats::kRngVersion);
    // Chi-square against the exact law is cheap for any n this command can
    // reach; report it per statistic.
    for (const auto &dist : res.distributions) {
        auto probs = chordstats::analysis::cached_probs(dist.stat, n);
        double chi2 = chordstats::oracle::chi_square(dist.counts, *probs, reps);
        rec.meta(std::string("chi_square_") + chordstats::stat_symbol(dist.stat),
                 format_double(chi2));
    }
}

void run_figure2(int n, const std::string &stat_text, OutputRecord &rec) {
    rec.param("n", n);
    rec.param("stat", stat_text.empty() ? "all" : stat_text);
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    rec.columns = {"stat", "x", "p", "exact_scaled", "asymptotic", "abs_error"};
    for (StatKind stat : stats_or_all(stat_text)) {
        for (const auto &row : chordstats::analysis::convergence_table(stat, n, grid))
            rec.row({sym(stat), format_double(row.x), std::to_string(row.p),
                     format_double(row.exact_scaled), format_double(row.asymptotic),
                     format_double(row.abs_error)});
    }
}

// Returns false when the recursion route disagrees with the direct sums.
bool run_recursion(int n_max, OutputRecord &rec) {
    rec.param("n_max", n_max);
    // Base column from the series route: n! [z^n] of the crossing function
    // at y = 0, an independent path into the recursion.
    chordstats::series::TruncatedSeries gf =
        chordstats::series::build_gf(StatKind::Crossing, n_max);
    std::vector<Int> base;
    for (int m = 1; m <= n_max; ++m)
        base.push_back(chordstats::series::gf_coefficient(gf, m, 0));
    std::vector<chordstats::CountTable> rows =
        chordstats::exact::k_recursion_table(n_max, base);
    rec.columns = {"n", "p", "recursion_count", "direct_count", "agree"};
    bool all_agree = true;
    for (const chordstats::CountTable &row : rows) {
        chordstats::CountTable direct = chordstats::exact::count_row(StatKind::Crossing, row.n);
        for (int p = 0; p < row.n; ++p) {
            bool agree = row.counts[p] == direct.counts[p];
            all_agree = all_agree && agree;
            rec.row({std::to_string(row.n), std::to_string(p),
                     chordstats::to_string(row.counts[p]),
                     chordstats::to_string(direct.counts[p]), agree ? "true" : "false"});
        }
    }
    rec.meta("agreement", all_agree ? "true" : "false");
    return all_agree;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact and asymptotic statistics of a marked chord in a linear chord diagram"};
    app.require_subcommand(1);
    CommonOptions common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    // --format may appear after the subcommand as well
    auto add_subcommand = [&app](const char *name, const char *description) {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->fallthrough();
        return sub;
    };

    std::string stat_text;
    int n = 1, n_max = 6, m = 1, points = 101, threads = 1, order = 10;
    std::optional<int> p_opt;
    bool normalize = false, cdf = false, allow_large = false;
    std::uint64_t reps = 100000, seed = 1;

    CLI::App *cmd_count = add_subcommand("count", "Exact count for one statistic");
    cmd_count->add_option("--stat", stat_text, "Statistic (K, C, G or X)")->required();
    cmd_count->add_option("--n", n, "Number of chords")->required();
    int p_value = 0;
    CLI::Option *p_flag = cmd_count->add_option("--p", p_value, "Single p instead of the row");

    CLI::App *cmd_table = add_subcommand("table", "Count tables for n = 1..n-max");
    std::string table_stat;
    cmd_table->add_option("--stat", table_stat, "Statistic, or all when omitted");
    cmd_table->add_option("--n-max", n_max, "Largest n")->required();

    CLI::App *cmd_dist = add_subcommand("dist", "Exact distribution of a statistic");
    cmd_dist->add_option("--stat", stat_text, "Statistic")->required();
    cmd_dist->add_option("--n", n, "Number of chords")->required();
    cmd_dist->add_flag("--normalize", normalize, "Emit probabilities instead of counts");

    CLI::App *cmd_moments = add_subcommand("moments", "Factorial moments, mean and variance");
    cmd_moments->add_option("--stat", stat_text, "Statistic")->required();
    cmd_moments->add_option("--n", n, "Number of chords")->required();
    cmd_moments->add_option("--m", m, "Moment order")->required();

    CLI::App *cmd_asym = add_subcommand("asym", "Asymptotic density or CDF on a uniform grid");
    cmd_asym->add_option("--stat", stat_text, "Statistic")->required();
    cmd_asym->add_option("--points", points, "Grid size")->capture_default_str();
    cmd_asym->add_flag("--cdf", cdf, "Emit the CDF instead of the density");

    CLI::App *cmd_gf = add_subcommand("gf", "Counts recovered from the generating function");
    cmd_gf->add_option("--stat", stat_text, "Statistic")->required();
    cmd_gf->add_option("--order", order, "Truncation order in z")->required();

    CLI::App *cmd_oracle = add_subcommand("oracle", "Brute-force enumeration vs exact counts");
    cmd_oracle->add_option("--n", n, "Number of chords")->required();
    cmd_oracle->add_option("--threads", threads, "Worker threads")->capture_default_str();
    cmd_oracle->add_flag("--allow-large", allow_large, "Raise the enumeration cap to 9");

    CLI::App *cmd_sample = add_subcommand("sample", "Monte Carlo empirical distributions");
    cmd_sample->add_option("--n", n, "Number of chords")->required();
    cmd_sample->add_option("--reps", reps, "Number of draws")->required();
    cmd_sample->add_option("--seed", seed, "RNG seed")->required();

    CLI::App *cmd_fig2 = add_subcommand("figure2",
                                            "Exact scaled law vs asymptotic density on a grid");
    cmd_fig2->add_option("--n", n, "Number of chords")->required();
    cmd_fig2->add_option("--stat", stat_text, "Statistic, or all when omitted");

    CLI::App *cmd_rec = add_subcommand("recursion", "Crossing table via the row recursion");
    cmd_rec->add_option("--n-max", n_max, "Largest n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    OutputRecord rec;
    bool agree = true;
    auto start = std::chrono::steady_clock::now();
    try {
        if (cmd_count->parsed()) {
            rec.command = "count";
            if (p_flag->count() > 0) p_opt = p_value;
            run_count(stat_text, n, p_opt, rec);
        } else if (cmd_table->parsed()) {
            rec.command = "table";
            run_table(table_stat, n_max, rec);
        } else if (cmd_dist->parsed()) {
            rec.command = "dist";
            run_dist(stat_text, n, normalize, rec);
        } else if (cmd_moments->parsed()) {
            rec.command = "moments";
            run_moments(stat_text, n, m, rec);
        } else if (cmd_asym->parsed()) {
            rec.command = "asym";
            run_asym(stat_text, points, cdf, rec);
        } else if (cmd_gf->parsed()) {
            rec.command = "gf";
            run_gf(stat_text, order, rec);
        } else if (cmd_oracle->parsed()) {
            rec.command = "oracle";
            agree = run_oracle(n, allow_large, threads, rec);
        } else if (cmd_sample->parsed()) {
            rec.command = "sample";
            run_sample(n, reps, seed, rec);
        } else if (cmd_fig2->parsed()) {
            rec.command = "figure2";
            run_figure2(n, stat_text, rec);
        } else if (cmd_rec->parsed()) {
            rec.command = "recursion";
            agree = run_recursion(n_max, rec);
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    auto stop = std::chrono::steady_clock::now();
    rec.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    emit(rec, common);
    if (!agree) {
        std::cerr << "internal error: cross-route disagreement, see the agree column\n";
        return 2;
    }
    return 0;
}

// Command-line front end: run tests on data files, tabulate critical values,
// estimate power, run consistency studies, and regenerate the reference
// tables.  Exit codes: 0 success, 2 rejection (test subcommand only), 1 error.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "progof/progof.hpp"

namespace {

using namespace progof;

std::string shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

struct CommonOpts {
    double alpha = 0.10;
    int reps = 10000;
    std::uint64_t seed = 42;
    int workers = 0;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts* opts, const char* out_help) {
    cmd->add_option("--alpha", opts->alpha, "significance level");
    cmd->add_option("--reps", opts->reps, "Monte Carlo replicates");
    cmd->add_option("--seed", opts->seed, "random seed");
    cmd->add_option("--workers", opts->workers, "worker threads, 0 = one per core");
    cmd->add_option("--out", opts->out, out_help);
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

MonteCarloConfig config_from(const CommonOpts& opts) {
    MonteCarloConfig config;
    config.alpha = opts.alpha;
    config.reps = opts.reps;
    config.seed = opts.seed;
    config.workers = opts.workers;
    if (const char* env = std::getenv("PROGOF_WORKERS"); env && *env)
        config.workers = std::atoi(env);
    validate_config(config);
    return config;
}

std::string cache_directory() {
    if (const char* env = std::getenv("PROGOF_CACHE_DIR")) return env;
    return ".progof-cache";
}

bool io_parse_int(const std::string& s, int* out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) items.push_back(tok);
    return items;
}

std::vector<StatisticKind> statistic_list(const std::string& text) {
    if (text.empty() || text == "all") return all_statistic_kinds();
    std::vector<StatisticKind> kinds;
    for (const auto& tok : split_list(text)) kinds.push_back(parse_statistic(tok));
    if (kinds.empty()) throw ParseError("empty statistic list");
    return kinds;
}

std::vector<DistributionFamily> family_list(const std::string& text) {
    std::vector<DistributionFamily> families;
    for (const auto& tok : split_list(text)) families.push_back(parse_family(tok));
    if (families.empty()) throw ParseError("empty alternative list");
    return families;
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& tok : split_list(text)) {
        int v = 0;
        if (!io_parse_int(tok, &v)) throw ParseError("bad integer '" + tok + "'");
        values.push_back(v);
    }
    if (values.empty()) throw ParseError("empty list");
    return values;
}

// --schemes table6 | "[1],[15]"; --scheme n:r1,...,rm for a custom design.
std::vector<CensoringScheme> scheme_selection(const std::string& schemes,
                                              const std::string& custom) {
    std::vector<CensoringScheme> out;
    if (!custom.empty()) {
        const auto colon = custom.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected n:r1,...,rm in --scheme, got '" + custom + "'");
        int n = 0;
        if (!io_parse_int(custom.substr(0, colon), &n))
            throw ParseError("bad n in --scheme '" + custom + "'");
        auto r = parse_removals(custom.substr(colon + 1));
        const int m = static_cast<int>(r.size());
        out.push_back(validate_scheme(n, m, std::move(r), "custom"));
    }
    if (schemes == "table6") {
        for (auto& s : catalog_table6()) out.push_back(std::move(s));
    } else if (!schemes.empty()) {
        for (const auto& tok : split_list(schemes)) out.push_back(catalog_scheme(tok));
    }
    if (out.empty()) throw ParseError("no scheme selected; pass --schemes or --scheme");
    return out;
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

bool rank_is_clamped(double alpha, int reps) {
    const double real_rank = (1.0 - alpha) * reps;
    const int rank = static_cast<int>(std::ceil(real_rank - 1e-9));
    return real_rank < 1.0 - 1e-9 || rank > reps;
}

void warn_if_clamped(double alpha, int reps) {
    if (rank_is_clamped(alpha, reps))
        std::cerr << "warning: alpha=" << shortest(alpha) << " lands outside the Monte Carlo"
                  << " resolution at reps=" << reps << "; critical value clamps to an extreme"
                  << " order statistic\n";
}

// ---------------------------------------------------------------------------
// test
// ---------------------------------------------------------------------------

struct TestOpts {
    TestOpts() { common.format = "json"; }  // reports default to machine-readable
    std::string data_path;
    int n = 0;
    bool sort_rows = false;
    std::string stats;
    CommonOpts common;
};

void print_test_table(const ReportDocument& doc) {
    std::printf("scheme %s: n=%d m=%d removals=%s\n", doc.scheme.label.c_str(), doc.scheme.n,
                doc.scheme.m, format_removals(doc.scheme.r).c_str());
    std::printf("fit: mu=%s sigma=%s loglik=%s %s\n", format_fixed(doc.fit.mu_hat).c_str(),
                format_fixed(doc.fit.sigma_hat).c_str(), format_fixed(doc.fit.loglik).c_str(),
                doc.fit.converged ? "(converged)" : "(NOT converged)");
    std::printf("alpha=%s reps=%d seed=%llu\n", shortest(doc.config.alpha).c_str(),
                doc.config.reps, static_cast<unsigned long long>(doc.config.seed));
    std::printf("%-5s %10s %10s %10s  %s\n", "stat", "observed", "critical", "p-value",
                "decision");
    for (const auto& r : doc.results)
        std::printf("%-5s %10s %10s %10s  %s\n", r.statistic.c_str(),
                    format_fixed(r.observed).c_str(), format_fixed(r.critical_value).c_str(),
                    format_fixed(r.p_value).c_str(), r.reject ? "reject" : "accept");
}

int cmd_test(const TestOpts& opts) {
    const auto config = config_from(opts.common);
    const auto kinds = statistic_list(opts.stats);
    const auto data = load_data_file(opts.data_path, opts.n, opts.sort_rows);
    const auto sample = data.sample();
    warn_if_clamped(config.alpha, config.reps);

    ReportDocument doc;
    doc.data_path = opts.data_path;
    doc.scheme = sample.scheme;
    doc.config = config;
    doc.results = run_test(sample, kinds, config);
    doc.fit = doc.results.front().fit;

    std::string stat_names;
    for (const auto& r : doc.results) {
        if (!stat_names.empty()) stat_names += ',';
        stat_names += r.statistic;
    }
    const std::string out_path = opts.common.out.empty() ? "report.json" : opts.common.out;
    doc.command = "test --data " + opts.data_path + " --n " + std::to_string(opts.n) +
                  (opts.sort_rows ? " --sort" : "") + " --stat " + stat_names + " --alpha " +
                  shortest(config.alpha) + " --reps " + std::to_string(config.reps) + " --seed " +
                  std::to_string(config.seed) + " --workers " + std::to_string(config.workers) +
                  " --format " + opts.common.format + " --out " + out_path;

    print_test_table(doc);
    if (opts.common.format == "json") {
        emit_text(report_to_json_string(doc), out_path);
    } else {
        std::ostringstream csv;
        write_test_csv(csv, doc.results);
        emit_text(csv.str(), out_path);
    }
    std::cerr << "report written to " << out_path << "\n";
    return doc.any_rejection() ? 2 : 0;
}

// ---------------------------------------------------------------------------
// critical-values
// ---------------------------------------------------------------------------

struct CriticalValuesOpts {
    std::string schemes;
    std::string scheme;
    std::string stats = "H";
    CommonOpts common;
};

std::vector<CriticalValueResult> critical_values_for(const std::vector<CensoringScheme>& schemes,
                                                     const std::vector<StatisticKind>& kinds,
                                                     const MonteCarloConfig& config,
                                                     const CriticalValueCache& cache) {
    std::vector<CriticalValueResult> rows;
    for (const auto& scheme : schemes)
        for (const auto& kind : kinds) {
            double cv = 0.0;
            if (!cache.lookup(scheme, kind, config, &cv)) {
                cv = critical_value(scheme, kind, config);
                cache.store(scheme, kind, config, cv);
            }
            rows.push_back({scheme.label, statistic_name(kind), config.alpha, cv});
        }
    return rows;
}

int cmd_critical_values(const CriticalValuesOpts& opts) {
    const auto config = config_from(opts.common);
    const auto kinds = statistic_list(opts.stats);
    const auto schemes = scheme_selection(opts.schemes, opts.scheme);
    warn_if_clamped(config.alpha, config.reps);

    const CriticalValueCache cache(cache_directory());
    const auto rows = critical_values_for(schemes, kinds, config, cache);
    if (opts.common.format == "json") {
        emit_text(critical_values_to_json(rows).dump(2) + "\n", opts.common.out);
    } else {
        std::ostringstream csv;
        write_critical_values_csv(csv, rows);
        emit_text(csv.str(), opts.common.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// power
// ---------------------------------------------------------------------------

struct PowerOpts {
    std::string schemes;
    std::string scheme;
    std::string stats = "all";
    std::string alts = "t3,t4,logistic,laplace";
    CommonOpts common;
};

int cmd_power(const PowerOpts& opts) {
    const auto config = config_from(opts.common);
    const auto kinds = statistic_list(opts.stats);
    const auto schemes = scheme_selection(opts.schemes, opts.scheme);
    const auto alternatives = family_list(opts.alts);
    warn_if_clamped(config.alpha, config.reps);

    std::vector<PowerCell> cells;
    for (const auto& scheme : schemes) {
        auto block = power_study(scheme, kinds, alternatives, config);
        cells.insert(cells.end(), block.begin(), block.end());
    }
    if (opts.common.format == "json") {
        emit_text(power_to_json(cells).dump(2) + "\n", opts.common.out);
    } else {
        std::ostringstream csv;
        write_power_csv(csv, cells);
        emit_text(csv.str(), opts.common.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// consistency
// ---------------------------------------------------------------------------

struct ConsistencyOpts {
    int family = 0;
    std::string ms;
    std::string alts = "normal,t3,t4,laplace,logistic";
    CommonOpts common;
};

int cmd_consistency(const ConsistencyOpts& opts) {
    const auto config = config_from(opts.common);
    const auto m_values = int_list(opts.ms);
    const auto alternatives = family_list(opts.alts);
    std::vector<std::string> names;
    for (const auto& alt : alternatives) names.push_back(family_name(alt));

    const auto cells = consistency_study(opts.family, m_values, alternatives, config);
    if (opts.common.format == "json") {
        emit_text(consistency_to_json(m_values, names, cells).dump(2) + "\n", opts.common.out);
    } else {
        std::ostringstream csv;
        write_consistency_csv(csv, m_values, names, cells);
        emit_text(csv.str(), opts.common.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct ReproduceOpts {
    int table = 0;
    int max_m = 0;  // 0 = full grid
    CommonOpts common;
};

struct DiffLine {
    std::string where;
    double ours = 0.0;
    double ref = 0.0;
    double tol = 0.0;
    bool flagged = false;  // known misprint, excluded from the tally
};

void print_diff_summary(const std::string& table, const std::vector<DiffLine>& lines) {
    int within = 0, counted = 0;
    for (const auto& d : lines) {
        if (d.flagged) {
            std::printf("  %-28s ours=%s ref=%s  flagged — see docs\n", d.where.c_str(),
                        format_fixed(d.ours).c_str(), format_fixed(d.ref).c_str());
            continue;
        }
        ++counted;
        const double diff = d.ours - d.ref;
        const bool ok = std::fabs(diff) <= d.tol;
        within += ok;
        if (!ok)
            std::printf("  %-28s ours=%s ref=%s diff=%+.4f tol=%.4f  DIFF\n", d.where.c_str(),
                        format_fixed(d.ours).c_str(), format_fixed(d.ref).c_str(), diff, d.tol);
    }
    std::printf("%s: %d/%d cells within tolerance\n", table.c_str(), within, counted);
}

// Wire connection strength data, the worked example shipped with the library.
const double kWireX[] = {550, 750, 950, 1150, 1150, 1150, 1350, 1450, 1550, 1850};
const int kWireR[] = {0, 2, 1, 0, 3, 0, 0, 2, 0, 2};
constexpr int kWireN = 20;

CensoredSample wire_sample() {
    return {validate_scheme(kWireN, 10, std::vector<int>(std::begin(kWireR), std::end(kWireR)),
                            "wire"),
            std::vector<double>(std::begin(kWireX), std::end(kWireX))};
}

int reproduce_consistency(int family, const ReproduceOpts& opts, const MonteCarloConfig& config) {
    struct Ref {
        int m;
        double value[5];
    };
    std::vector<Ref> refs;
    auto load = [&](const auto& table) {
        for (const auto& row : table)
            if (opts.max_m == 0 || row.m <= opts.max_m)
                refs.push_back(
                    {row.m, {row.normal, row.t3, row.t4, row.laplace, row.logistic}});
    };
    switch (family) {
        case 1: load(reference::kConsistencyFamily1); break;
        case 2: load(reference::kConsistencyFamily2); break;
        case 3: load(reference::kConsistencyFamily3); break;
        case 4: load(reference::kConsistencyFamily4); break;
        case 5: load(reference::kConsistencyFamily5); break;
        default: throw ParseError("unknown table id");
    }
    if (refs.empty()) throw ParseError("--max-m filtered out every row");

    const std::vector<std::string> names = {"normal", "t3", "t4", "laplace", "logistic"};
    std::vector<int> m_values;
    for (const auto& ref : refs) m_values.push_back(ref.m);
    const auto cells =
        consistency_study(family, m_values, family_list("normal,t3,t4,laplace,logistic"), config);

    std::ostringstream csv;
    write_consistency_csv(csv, m_values, names, cells);
    const std::string path = "table" + std::to_string(family) + ".csv";
    emit_text(csv.str(), path);

    std::vector<DiffLine> lines;
    for (std::size_t i = 0; i < refs.size(); ++i)
        for (std::size_t j = 0; j < names.size(); ++j) {
            const double ours = cells[i * names.size() + j].estimate;
            const double ref = refs[i].value[j];
            lines.push_back({"m=" + std::to_string(refs[i].m) + " " + names[j], ours, ref,
                             0.10 * ref, false});
        }
    print_diff_summary(path, lines);
    return 0;
}

int reproduce_critical_values(const MonteCarloConfig& config) {
    const CriticalValueCache cache(cache_directory());
    const auto rows =
        critical_values_for(catalog_table6(), {StatisticKind::h()}, config, cache);

    std::ostringstream csv;
    write_critical_values_csv(csv, rows);
    emit_text(csv.str(), "table7.csv");

    const double tol = 0.006 * std::sqrt(10000.0 / config.reps);
    std::vector<DiffLine> lines;
    for (std::size_t i = 0; i < rows.size(); ++i)
        lines.push_back(
            {rows[i].scheme + " H", rows[i].value, reference::kCriticalValuesH[i].h, tol, false});
    print_diff_summary("table7.csv", lines);
    return 0;
}

int reproduce_power(const MonteCarloConfig& config) {
    const auto kinds = all_statistic_kinds();
    const auto alternatives = family_list("t3,t4,logistic,laplace");

    std::vector<PowerCell> cells;
    for (const auto& scheme : catalog_table6()) {
        auto block = power_study(scheme, kinds, alternatives, config);
        cells.insert(cells.end(), block.begin(), block.end());
    }
    std::ostringstream csv;
    write_power_csv(csv, cells);
    emit_text(csv.str(), "table8.csv");

    // Tolerance covers two Monte Carlo estimates and widens as reps shrink.
    const double tol = 0.03 * std::sqrt(10000.0 / config.reps);
    std::vector<DiffLine> lines;
    int t_within = 0, t_total = 0;
    std::size_t idx = 0;
    for (const auto& row : reference::kPower) {
        for (int k = 0; k < 12; ++k, ++idx) {
            const auto& cell = cells[idx];
            if (cell.statistic == "T") {
                // The reference T column is not reproducible from the printed
                // definition of T; report it informationally only.
                ++t_total;
                t_within += std::fabs(cell.estimate - row.value[k]) <= tol;
                continue;
            }
            lines.push_back({std::string(row.scheme) + " " + row.alternative + " " +
                                 cell.statistic,
                             cell.estimate, row.value[k], tol, false});
        }
    }
    print_diff_summary("table8.csv", lines);
    std::printf("note: T column compared informationally only (%d/%d within tolerance);"
                " the reference T figures do not follow from the printed definition, see"
                " README\n",
                t_within, t_total);
    std::printf("note: the reference grid carries a few misprinted cells; see README\n");
    return 0;
}

int reproduce_data_case(const MonteCarloConfig& config) {
    const auto sample = wire_sample();
    const auto reports = run_test(sample, all_statistic_kinds(), config);

    std::ostringstream csv;
    write_test_csv(csv, reports);
    emit_text(csv.str(), "table10.csv");

    const double p_tol = 0.02 * std::sqrt(10000.0 / config.reps);
    std::vector<DiffLine> lines;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& ref = reference::kWireCase[i];
        const bool flagged_value = reports[i].statistic == "H" || reports[i].statistic == "T";
        lines.push_back(
            {reports[i].statistic + " value", reports[i].observed, ref.value, 0.005,
             flagged_value});
        lines.push_back({reports[i].statistic + " p-value", reports[i].p_value, ref.p_value,
                         p_tol, reports[i].statistic == "T"});
    }
    print_diff_summary("table10.csv", lines);
    return 0;
}

int cmd_reproduce(const ReproduceOpts& opts) {
    const auto config = config_from(opts.common);
    switch (opts.table) {
        case 1:
        case 2:
        case 3:
        case 4:
        case 5: return reproduce_consistency(opts.table, opts, config);
        case 7: return reproduce_critical_values(config);
        case 8: return reproduce_power(config);
        case 10: return reproduce_data_case(config);
        default: throw ParseError("unknown table id " + std::to_string(opts.table));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit tests for normality under progressive type-II censoring"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    TestOpts test_opts;
    auto* test = app.add_subcommand("test", "test a censored data file for normality");
    test->add_option("--data", test_opts.data_path, "CSV data file with header x,r")->required();
    test->add_option("--n", test_opts.n, "total units on test")->required();
    test->add_flag("--sort", test_opts.sort_rows, "sort rows by x before validating");
    test->add_option("--stat", test_opts.stats, "statistics, comma separated or 'all'");
    add_common(test, &test_opts.common, "report path (default report.json)");

    CriticalValuesOpts cv_opts;
    auto* cv = app.add_subcommand("critical-values", "tabulate Monte Carlo critical values");
    cv->add_option("--schemes", cv_opts.schemes, "'table6' or catalog labels like [1],[15]");
    cv->add_option("--scheme", cv_opts.scheme, "custom scheme n:r1,...,rm");
    cv->add_option("--stat", cv_opts.stats, "statistics, comma separated or 'all'");
    add_common(cv, &cv_opts.common, "output file (default stdout)");

    PowerOpts power_opts;
    auto* pw = app.add_subcommand("power", "estimate rejection rates under alternatives");
    pw->add_option("--schemes", power_opts.schemes, "'table6' or catalog labels like [1],[15]");
    pw->add_option("--scheme", power_opts.scheme, "custom scheme n:r1,...,rm");
    pw->add_option("--stat", power_opts.stats, "statistics, comma separated or 'all'");
    pw->add_option("--alt", power_opts.alts, "alternatives, e.g. t3,t4,logistic,laplace");
    add_common(pw, &power_opts.common, "output file (default stdout)");

    ConsistencyOpts cons_opts;
    auto* cons = app.add_subcommand("consistency", "mean H across sample sizes");
    cons->add_option("--family", cons_opts.family, "scheme family 1..5")->required();
    cons->add_option("--m", cons_opts.ms, "observed sample sizes, comma separated")->required();
    cons->add_option("--alt", cons_opts.alts, "sampling distributions");
    add_common(cons, &cons_opts.common, "output file (default stdout)");

    ReproduceOpts rep_opts;
    auto* rep = app.add_subcommand("reproduce", "regenerate a reference table and diff it");
    rep->add_option("table", rep_opts.table, "table id: 1,2,3,4,5,7,8,10")->required();
    rep->add_option("--max-m", rep_opts.max_m, "skip consistency rows above this m (0 = all)");
    add_common(rep, &rep_opts.common, "(unused; tables are written as table<id>.csv)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (test->parsed()) return cmd_test(test_opts);
        if (cv->parsed()) return cmd_critical_values(cv_opts);
        if (pw->parsed()) return cmd_power(power_opts);
        if (cons->parsed()) return cmd_consistency(cons_opts);
        if (rep->parsed()) return cmd_reproduce(rep_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "progof/censoring.hpp"
#include "progof/errors.hpp"
#include "progof/experiments.hpp"
#include "progof/mle.hpp"
#include "progof/simulate.hpp"

namespace progof {

inline constexpr std::string_view kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Locale-free number formatting
// ---------------------------------------------------------------------------

inline std::string format_fixed(double value, int decimals = 4) {
    char buf[512];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc()) throw DomainError("value not representable in fixed notation");
    return std::string(buf, ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool parse_double(std::string_view s, double* out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

inline bool parse_int(std::string_view s, int* out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Data files: "x,r" header, one row per observed failure, '#' comments
// ---------------------------------------------------------------------------

struct DataFile {
    std::vector<double> x;
    std::vector<int> r;
    int n = 0;

    CensoringScheme scheme(std::string label = "data") const {
        return validate_scheme(n, static_cast<int>(x.size()), r, std::move(label));
    }
    CensoredSample sample(std::string label = "data") const {
        return {scheme(std::move(label)), x};
    }
};

inline DataFile parse_data_file(std::istream& in, int n, bool sort_rows = false) {
    if (n <= 0) throw SchemeInconsistent("total units n must be positive");
    DataFile file;
    file.n = n;
    std::vector<int> row_line;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        const auto trimmed = detail::trim(line);
        if (trimmed.empty()) continue;
        if (!header_seen) {
            std::string squeezed;
            for (char c : trimmed)
                if (c != ' ' && c != '\t') squeezed += c;
            if (squeezed != "x,r") fail("expected header \"x,r\"");
            header_seen = true;
            continue;
        }
        const auto comma = trimmed.find(',');
        if (comma == std::string_view::npos || trimmed.find(',', comma + 1) != std::string_view::npos)
            fail("expected two comma-separated fields");
        double xv = 0.0;
        int rv = 0;
        if (!detail::parse_double(detail::trim(trimmed.substr(0, comma)), &xv))
            fail("bad x value");
        if (!detail::parse_int(detail::trim(trimmed.substr(comma + 1)), &rv))
            fail("bad removal count");
        if (rv < 0) fail("removal count must be nonnegative");
        file.x.push_back(xv);
        file.r.push_back(rv);
        row_line.push_back(lineno);
    }
    if (!header_seen) throw ParseError("missing \"x,r\" header");
    if (file.x.empty()) throw ParseError("no data rows");
    if (sort_rows) {
        std::vector<std::size_t> order(file.x.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return file.x[a] < file.x[b]; });
        DataFile sorted;
        sorted.n = n;
        for (std::size_t i : order) {
            sorted.x.push_back(file.x[i]);
            sorted.r.push_back(file.r[i]);
        }
        file = std::move(sorted);
    } else {
        for (std::size_t i = 1; i < file.x.size(); ++i)
            if (file.x[i] < file.x[i - 1]) {
                lineno = row_line[i];
                fail("x values must be nondecreasing (pass the sort flag to reorder)");
            }
    }
    file.scheme();  // throws SchemeInconsistent when m + sum(r) != n
    return file;
}

inline DataFile load_data_file(const std::string& path, int n, bool sort_rows = false) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_data_file(in, n, sort_rows);
}

// ---------------------------------------------------------------------------
// Machine-readable test reports
// ---------------------------------------------------------------------------

struct ReportDocument {
    std::string version = std::string(kVersion);
    std::string command;
    std::string data_path;
    CensoringScheme scheme;
    MonteCarloConfig config;
    LocationScaleFit fit;
    std::vector<TestReport> results;

    bool any_rejection() const {
        return std::any_of(results.begin(), results.end(),
                           [](const TestReport& r) { return r.reject; });
    }
};

// Reports carry no timestamps or hostnames: rerunning the recorded command
// must reproduce the file byte for byte.
inline nlohmann::ordered_json report_to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["version"] = doc.version;
    j["command"] = doc.command;
    j["data"] = doc.data_path;
    j["scheme"] = {{"label", doc.scheme.label},
                   {"n", doc.scheme.n},
                   {"m", doc.scheme.m},
                   {"removals", doc.scheme.r}};
    j["config"] = {{"alpha", doc.config.alpha},
                   {"reps", doc.config.reps},
                   {"seed", doc.config.seed},
                   {"workers", doc.config.workers}};
    j["fit"] = {{"mu", doc.fit.mu_hat},
                {"sigma", doc.fit.sigma_hat},
                {"loglik", doc.fit.loglik},
                {"converged", doc.fit.converged}};
    auto& results = j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : doc.results)
        results.push_back({{"statistic", r.statistic},
                           {"observed", r.observed},
                           {"critical_value", r.critical_value},
                           {"p_value", r.p_value},
                           {"reject", r.reject}});
    return j;
}

inline std::string report_to_json_string(const ReportDocument& doc) {
    return report_to_json(doc).dump(2) + "\n";
}

inline ReportDocument parse_report(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    ReportDocument doc;
    doc.version = j.at("version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.data_path = j.at("data").get<std::string>();
    const auto& scheme = j.at("scheme");
    doc.scheme = validate_scheme(scheme.at("n").get<int>(), scheme.at("m").get<int>(),
                                 scheme.at("removals").get<std::vector<int>>(),
                                 scheme.at("label").get<std::string>());
    const auto& config = j.at("config");
    doc.config.alpha = config.at("alpha").get<double>();
    doc.config.reps = config.at("reps").get<int>();
    doc.config.seed = config.at("seed").get<std::uint64_t>();
    doc.config.workers = config.at("workers").get<int>();
    const auto& fit = j.at("fit");
    doc.fit.mu_hat = fit.at("mu").get<double>();
    doc.fit.sigma_hat = fit.at("sigma").get<double>();
    doc.fit.loglik = fit.at("loglik").get<double>();
    doc.fit.converged = fit.at("converged").get<bool>();
    for (const auto& entry : j.at("results")) {
        TestReport r;
        r.statistic = entry.at("statistic").get<std::string>();
        r.kind = parse_statistic(r.statistic);
        r.observed = entry.at("observed").get<double>();
        r.critical_value = entry.at("critical_value").get<double>();
        r.p_value = entry.at("p_value").get<double>();
        r.reject = entry.at("reject").get<bool>();
        r.reps = doc.config.reps;
        r.seed = doc.config.seed;
        r.alpha = doc.config.alpha;
        r.scheme_label = doc.scheme.label;
        r.fit = doc.fit;
        doc.results.push_back(std::move(r));
    }
    return doc;
}

// ---------------------------------------------------------------------------
// CSV table writers, 4 decimal places throughout
// ---------------------------------------------------------------------------

struct CriticalValueResult {
    std::string scheme;
    std::string statistic;
    double alpha = 0.10;
    double value = 0.0;
};

inline void write_test_csv(std::ostream& out, const std::vector<TestReport>& reports) {
    out << "statistic,observed,critical_value,p_value,reject\n";
    for (const auto& r : reports)
        out << r.statistic << ',' << format_fixed(r.observed) << ','
            << format_fixed(r.critical_value) << ',' << format_fixed(r.p_value) << ','
            << (r.reject ? 1 : 0) << '\n';
}

inline void write_critical_values_csv(std::ostream& out,
                                      const std::vector<CriticalValueResult>& rows) {
    out << "scheme,statistic,alpha,critical_value\n";
    for (const auto& row : rows)
        out << row.scheme << ',' << row.statistic << ',' << format_fixed(row.alpha, 2) << ','
            << format_fixed(row.value) << '\n';
}

inline void write_power_csv(std::ostream& out, const std::vector<PowerCell>& cells) {
    out << "scheme,alternative,statistic,power,std_error\n";
    for (const auto& cell : cells)
        out << cell.scheme_label << ',' << cell.alternative << ',' << cell.statistic << ','
            << format_fixed(cell.estimate) << ',' << format_fixed(cell.std_error) << '\n';
}

// Consistency cells arrive m-major, alternative-minor; emitted as one row per
// m with one column per alternative.
inline void write_consistency_csv(std::ostream& out, const std::vector<int>& m_values,
                                  const std::vector<std::string>& alternatives,
                                  const std::vector<ConsistencyCell>& cells) {
    out << "m";
    for (const auto& name : alternatives) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        out << m_values[i];
        for (std::size_t j = 0; j < alternatives.size(); ++j)
            out << ',' << format_fixed(cells[i * alternatives.size() + j].estimate);
        out << '\n';
    }
}

inline nlohmann::ordered_json critical_values_to_json(
    const std::vector<CriticalValueResult>& rows) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        j.push_back({{"scheme", row.scheme},
                     {"statistic", row.statistic},
                     {"alpha", row.alpha},
                     {"critical_value", row.value}});
    return j;
}

inline nlohmann::ordered_json power_to_json(const std::vector<PowerCell>& cells) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& cell : cells)
        j.push_back({{"scheme", cell.scheme_label},
                     {"alternative", cell.alternative},
                     {"statistic", cell.statistic},
                     {"power", cell.estimate},
                     {"std_error", cell.std_error}});
    return j;
}

inline nlohmann::ordered_json consistency_to_json(const std::vector<int>& m_values,
                                                  const std::vector<std::string>& alternatives,
                                                  const std::vector<ConsistencyCell>& cells) {
    auto j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m_values.size(); ++i)
        for (std::size_t k = 0; k < alternatives.size(); ++k) {
            const auto& cell = cells[i * alternatives.size() + k];
            j.push_back({{"m", m_values[i]},
                         {"alternative", cell.alternative},
                         {"mean_h", cell.estimate},
                         {"std_error", cell.std_error}});
        }
    return j;
}

// ---------------------------------------------------------------------------
// Critical-value cache
// ---------------------------------------------------------------------------

// One tiny JSON file per (scheme, statistic, alpha, reps, seed) tuple.  The
// tuple is echoed inside the file and checked on lookup, so a filename hash
// collision degrades to a miss.  An empty directory string disables caching.
class CriticalValueCache {
  public:
    explicit CriticalValueCache(std::string directory) : dir_(std::move(directory)) {}

    bool enabled() const { return !dir_.empty(); }

    bool lookup(const CensoringScheme& scheme, const StatisticKind& kind,
                const MonteCarloConfig& config, double* value) const {
        if (!enabled()) return false;
        std::ifstream in(path_for(scheme, kind, config));
        if (!in) return false;
        nlohmann::json j;
        try {
            in >> j;
            if (j.at("scheme_hash").get<std::uint64_t>() != scheme_hash(scheme) ||
                j.at("statistic").get<std::string>() != statistic_name(kind) ||
                j.at("alpha").get<double>() != config.alpha ||
                j.at("reps").get<int>() != config.reps ||
                j.at("seed").get<std::uint64_t>() != config.seed)
                return false;
            *value = j.at("critical_value").get<double>();
        } catch (const nlohmann::json::exception&) {
            return false;
        }
        return true;
    }

    void store(const CensoringScheme& scheme, const StatisticKind& kind,
               const MonteCarloConfig& config, double value) const {
        if (!enabled()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;  // cache is best-effort
        nlohmann::ordered_json j;
        j["scheme_hash"] = scheme_hash(scheme);
        j["statistic"] = statistic_name(kind);
        j["alpha"] = config.alpha;
        j["reps"] = config.reps;
        j["seed"] = config.seed;
        j["critical_value"] = value;
        std::ofstream out(path_for(scheme, kind, config));
        if (out) out << j.dump(2) << '\n';
    }

  private:
    std::string path_for(const CensoringScheme& scheme, const StatisticKind& kind,
                         const MonteCarloConfig& config) const {
        std::uint64_t h = scheme_hash(scheme);
        h = fnv1a(statistic_name(kind), h);
        std::uint64_t alpha_bits = 0;
        static_assert(sizeof alpha_bits == sizeof config.alpha);
        std::memcpy(&alpha_bits, &config.alpha, sizeof alpha_bits);
        h = fnv1a_mix(h, alpha_bits);
        h = fnv1a_mix(h, static_cast<std::uint64_t>(config.reps));
        h = fnv1a_mix(h, config.seed);
        char name[32];
        std::snprintf(name, sizeof name, "cv-%016llx.json",
                      static_cast<unsigned long long>(h));
        return (std::filesystem::path(dir_) / name).string();
    }

    std::string dir_;
};

}  // namespace progof

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "progof/censoring.hpp"
#include "progof/distributions.hpp"
#include "progof/errors.hpp"
#include "progof/gof.hpp"
#include "progof/mle.hpp"
#include "progof/rng.hpp"
#include "progof/simulate.hpp"

namespace progof {

// ---------------------------------------------------------------------------
// Configuration and result records
// ---------------------------------------------------------------------------

struct MonteCarloConfig {
    int reps = 10000;
    std::uint64_t seed = 42;
    double alpha = 0.10;
    int workers = 0;  // 0 = one per hardware thread
};

inline void validate_config(const MonteCarloConfig& config) {
    if (config.reps < 100) throw std::invalid_argument("Monte Carlo needs reps >= 100");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
}

struct TestReport {
    StatisticKind kind;
    std::string statistic;
    double observed = 0.0;
    double critical_value = 0.0;
    double p_value = 1.0;
    bool reject = false;
    int reps = 0;
    std::uint64_t seed = 0;
    double alpha = 0.10;
    std::string scheme_label;
    LocationScaleFit fit;
};

struct PowerCell {
    std::string scheme_label;
    std::string alternative;
    std::string statistic;
    double estimate = 0.0;
    double std_error = 0.0;
};
using ConsistencyCell = PowerCell;

// ---------------------------------------------------------------------------
// Replicate engine
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t stream_tag(std::string_view purpose, const CensoringScheme& scheme) {
    return fnv1a_mix(fnv1a(purpose), scheme_hash(scheme));
}

inline std::uint64_t stream_tag(std::string_view purpose, const CensoringScheme& scheme,
                                std::string_view family) {
    return fnv1a_mix(stream_tag(purpose, scheme), fnv1a(family));
}

// One statistic column per kind, one row per replicate.  Each replicate owns
// the stream (seed, tag, index, attempt); a fit that fails or does not
// converge is redrawn with the next attempt number, so results never depend
// on the worker count or on other replicates.
inline std::vector<std::vector<double>> statistic_matrix(const CensoringScheme& scheme,
                                                         const DistributionFamily& dist,
                                                         const std::vector<StatisticKind>& kinds,
                                                         const MonteCarloConfig& config,
                                                         std::uint64_t tag) {
    validate_config(config);
    const int reps = config.reps;
    const int m = scheme.m;
    const auto exponents = power_exponents(scheme);
    const auto mu = expected_uniform(scheme);

    std::vector<std::vector<double>> columns(kinds.size());
    for (auto& column : columns) column.resize(reps);

    constexpr int kMaxAttempts = 64;
    std::atomic<long> redraws{0};
    std::atomic<bool> exhausted{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_block = [&](int lo, int hi) {
        TransformedSample t{scheme, std::vector<double>(m), mu, std::vector<double>(m)};
        std::vector<double> scratch, u, x(m);
        long local_redraws = 0;
        try {
            for (int i = lo; i < hi; ++i) {
                int attempt = 0;
                for (; attempt < kMaxAttempts; ++attempt) {
                    Rng rng(config.seed, tag, static_cast<std::uint64_t>(i),
                            static_cast<std::uint64_t>(attempt));
                    sample_uniform_progressive_into(exponents, rng, scratch, u);
                    for (int j = 0; j < m; ++j) x[j] = quantile(dist, u[j]);
                    try {
                        const auto fit = fit_censored_normal(x, scheme.r);
                        if (!fit.converged) continue;
                        for (int j = 0; j < m; ++j) {
                            const double z = (x[j] - fit.mu_hat) / fit.sigma_hat;
                            t.u[j] = std::clamp(normal_cdf_std(z), 1e-15, 1.0 - 1e-15);
                            t.v[j] = t.u[j] - mu.mu[j];
                        }
                        for (std::size_t k = 0; k < kinds.size(); ++k)
                            columns[k][i] = compute_statistic(t, kinds[k]);
                        break;
                    } catch (const DegenerateSample&) {
                    } catch (const DegenerateDenominator&) {
                    }
                }
                local_redraws += attempt;
                if (attempt == kMaxAttempts) {
                    exhausted.store(true);
                    return;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
        redraws.fetch_add(local_redraws);
    };

    int nworkers = config.workers > 0 ? config.workers
                                      : static_cast<int>(std::thread::hardware_concurrency());
    nworkers = std::clamp(nworkers, 1, reps);
    if (nworkers == 1) {
        run_block(0, reps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        const int base = reps / nworkers, extra = reps % nworkers;
        int lo = 0;
        for (int w = 0; w < nworkers; ++w) {
            const int hi = lo + base + (w < extra ? 1 : 0);
            pool.emplace_back(run_block, lo, hi);
            lo = hi;
        }
        for (auto& thread : pool) thread.join();
    }

    if (first_error) std::rethrow_exception(first_error);
    if (exhausted.load())
        throw FitFailureCapExceeded("a replicate failed to produce a convergent fit");
    if (redraws.load() * 100 > reps)
        throw FitFailureCapExceeded("more than 1% of replicates needed redraws");
    return columns;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Null distribution, critical values, p-values
// ---------------------------------------------------------------------------

inline std::vector<std::vector<double>> null_statistic_matrix(
    const CensoringScheme& scheme, const std::vector<StatisticKind>& kinds,
    const MonteCarloConfig& config) {
    return detail::statistic_matrix(scheme, DistributionFamily::normal(), kinds, config,
                                    detail::stream_tag("null", scheme));
}

inline std::vector<double> null_statistic_sample(const CensoringScheme& scheme,
                                                 const StatisticKind& kind,
                                                 const MonteCarloConfig& config) {
    auto columns = null_statistic_matrix(scheme, {kind}, config);
    return std::move(columns[0]);
}

// Upper order statistic at rank ceil((1-alpha) reps) of an ascending sample.
// Ranks beyond the Monte Carlo resolution clamp to the extremes; `clamped`
// reports that so callers can warn.
inline double critical_value_from_sorted(const std::vector<double>& sorted, double alpha,
                                         bool* clamped = nullptr) {
    if (sorted.empty()) throw std::invalid_argument("empty null sample");
    const int reps = static_cast<int>(sorted.size());
    // The 1e-9 nudge undoes binary round-up, e.g. (1-0.10)*10000 > 9000.
    const double real_rank = (1.0 - alpha) * reps;
    int rank = static_cast<int>(std::ceil(real_rank - 1e-9));
    // A tail finer than 1/reps collapses onto an extreme order statistic;
    // flag it so callers can warn that alpha outruns the resolution.
    const bool clip = real_rank < 1.0 - 1e-9 || rank > reps;
    rank = std::clamp(rank, 1, reps);
    if (clamped) *clamped = clip;
    return sorted[rank - 1];
}

inline double critical_value(const CensoringScheme& scheme, const StatisticKind& kind,
                             const MonteCarloConfig& config) {
    auto sample = null_statistic_sample(scheme, kind, config);
    std::sort(sample.begin(), sample.end());
    return critical_value_from_sorted(sample, config.alpha);
}

inline double p_value_from_sample(double observed, const std::vector<double>& null_sample) {
    long count = 0;
    for (double value : null_sample)
        if (value >= observed) ++count;
    return (1.0 + count) / (null_sample.size() + 1.0);
}

inline double p_value(double observed, const CensoringScheme& scheme, const StatisticKind& kind,
                      const MonteCarloConfig& config) {
    return p_value_from_sample(observed, null_statistic_sample(scheme, kind, config));
}

// ---------------------------------------------------------------------------
// Power and consistency studies
// ---------------------------------------------------------------------------

inline PowerCell power(const CensoringScheme& scheme, const StatisticKind& kind,
                       const DistributionFamily& alternative, const MonteCarloConfig& config) {
    auto null_sample = null_statistic_sample(scheme, kind, config);
    std::sort(null_sample.begin(), null_sample.end());
    const double cv = critical_value_from_sorted(null_sample, config.alpha);

    const auto alt_columns = detail::statistic_matrix(
        scheme, alternative, {kind}, config,
        detail::stream_tag("power-alt", scheme, family_name(alternative)));
    long rejections = 0;
    for (double value : alt_columns[0])
        if (value > cv) ++rejections;
    const double p_hat = static_cast<double>(rejections) / config.reps;
    return {scheme.label, family_name(alternative), statistic_name(kind), p_hat,
            std::sqrt(p_hat * (1.0 - p_hat) / config.reps)};
}

// Grid form of power(): one null run per scheme serves every statistic, one
// alternative run serves every statistic.  Streams match power() cell for
// cell, so the two paths agree bit for bit.
inline std::vector<PowerCell> power_study(const CensoringScheme& scheme,
                                          const std::vector<StatisticKind>& kinds,
                                          const std::vector<DistributionFamily>& alternatives,
                                          const MonteCarloConfig& config) {
    const auto null_columns = null_statistic_matrix(scheme, kinds, config);
    std::vector<double> cv(kinds.size());
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        auto sorted = null_columns[k];
        std::sort(sorted.begin(), sorted.end());
        cv[k] = critical_value_from_sorted(sorted, config.alpha);
    }
    std::vector<PowerCell> cells;
    cells.reserve(alternatives.size() * kinds.size());
    for (const auto& alternative : alternatives) {
        const auto alt_columns = detail::statistic_matrix(
            scheme, alternative, kinds, config,
            detail::stream_tag("power-alt", scheme, family_name(alternative)));
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            long rejections = 0;
            for (double value : alt_columns[k])
                if (value > cv[k]) ++rejections;
            const double p_hat = static_cast<double>(rejections) / config.reps;
            cells.push_back({scheme.label, family_name(alternative), statistic_name(kinds[k]),
                             p_hat, std::sqrt(p_hat * (1.0 - p_hat) / config.reps)});
        }
    }
    return cells;
}

inline std::vector<ConsistencyCell> consistency_study(int family, const std::vector<int>& m_values,
                                                      const std::vector<DistributionFamily>& alternatives,
                                                      const MonteCarloConfig& config) {
    std::vector<ConsistencyCell> cells;
    for (int m : m_values) {
        const auto scheme = scheme_family(family, m);
        for (const auto& alternative : alternatives) {
            const auto columns = detail::statistic_matrix(
                scheme, alternative, {StatisticKind::h()}, config,
                detail::stream_tag("consistency", scheme, family_name(alternative)));
            double mean = 0.0;
            for (double value : columns[0]) mean += value;
            mean /= config.reps;
            double var = 0.0;
            for (double value : columns[0]) var += (value - mean) * (value - mean);
            var /= config.reps;
            cells.push_back({scheme.label, family_name(alternative), "H", mean,
                             std::sqrt(var / config.reps)});
        }
    }
    return cells;
}

// ---------------------------------------------------------------------------
// Full test on observed data
// ---------------------------------------------------------------------------

inline std::vector<TestReport> run_test(const CensoredSample& sample,
                                        const std::vector<StatisticKind>& kinds,
                                        const MonteCarloConfig& config) {
    const auto fit = fit_normal(sample);
    const auto t = transform(sample, fit);
    // One shared null run serves every statistic: the per-replicate fit is the
    // expensive part, and statistics consume no randomness of their own.
    const auto columns = null_statistic_matrix(sample.scheme, kinds, config);

    std::vector<TestReport> reports;
    reports.reserve(kinds.size());
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        TestReport report;
        report.kind = kinds[k];
        report.statistic = statistic_name(kinds[k]);
        report.observed = compute_statistic(t, kinds[k]);
        report.p_value = p_value_from_sample(report.observed, columns[k]);
        auto sorted = columns[k];
        std::sort(sorted.begin(), sorted.end());
        report.critical_value = critical_value_from_sorted(sorted, config.alpha);
        report.reject = report.observed > report.critical_value;
        report.reps = config.reps;
        report.seed = config.seed;
        report.alpha = config.alpha;
        report.scheme_label = sample.scheme.label;
        report.fit = fit;
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace progof

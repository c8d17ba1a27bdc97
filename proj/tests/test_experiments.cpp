#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "progof/censoring.hpp"
#include "progof/distributions.hpp"
#include "progof/experiments.hpp"
#include "progof/gof.hpp"

using namespace progof;

namespace {

std::vector<double> iota_sample(int reps) {
    std::vector<double> s(reps);
    std::iota(s.begin(), s.end(), 1.0);
    return s;
}

CensoredSample wire_sample() {
    return {validate_scheme(20, 10, {0, 2, 1, 0, 3, 0, 0, 2, 0, 2}, "wire"),
            {550, 750, 950, 1150, 1150, 1150, 1350, 1450, 1550, 1850}};
}

}  // namespace

TEST_CASE("critical value picks the ceil((1-alpha) reps) order statistic") {
    const auto sorted = iota_sample(100);
    REQUIRE(critical_value_from_sorted(sorted, 0.10) == 90.0);
    REQUIRE(critical_value_from_sorted(sorted, 0.05) == 95.0);
    REQUIRE(critical_value_from_sorted(sorted, 0.101) == 90.0);  // rank still ceil(89.9)
    // reps=10000 at alpha=0.10 must give rank 9000, not 9001
    const auto big = iota_sample(10000);
    REQUIRE(critical_value_from_sorted(big, 0.10) == 9000.0);
}

TEST_CASE("extreme alphas clamp to the sample range and report it") {
    const auto sorted = iota_sample(100);
    bool clamped = false;
    REQUIRE(critical_value_from_sorted(sorted, 0.999999, &clamped) == 1.0);
    REQUIRE(clamped);
    clamped = false;
    REQUIRE(critical_value_from_sorted(sorted, 0.5, &clamped) == 50.0);
    REQUIRE_FALSE(clamped);
    REQUIRE_THROWS(critical_value_from_sorted({}, 0.1));
}

TEST_CASE("p value uses the add-one estimator") {
    const auto sample = iota_sample(99);
    REQUIRE(p_value_from_sample(50.0, sample) == Catch::Approx((1.0 + 50.0) / 100.0));
    REQUIRE(p_value_from_sample(1000.0, sample) == Catch::Approx(0.01));
    REQUIRE(p_value_from_sample(-1.0, sample) == Catch::Approx(1.0));
}

TEST_CASE("config validation rejects bad settings") {
    MonteCarloConfig config;
    config.reps = 50;
    REQUIRE_THROWS(validate_config(config));
    config.reps = 100;
    config.alpha = 0.0;
    REQUIRE_THROWS(validate_config(config));
    config.alpha = 1.0;
    REQUIRE_THROWS(validate_config(config));
    config.alpha = 0.10;
    REQUIRE_NOTHROW(validate_config(config));
}

TEST_CASE("null sample is bit-identical across worker counts") {
    const auto scheme = catalog_scheme("[1]");
    MonteCarloConfig config;
    config.reps = 500;
    config.seed = 404;

    config.workers = 1;
    const auto serial = null_statistic_sample(scheme, StatisticKind::h(), config);
    config.workers = 3;
    const auto threaded = null_statistic_sample(scheme, StatisticKind::h(), config);
    REQUIRE(serial == threaded);

    config.workers = 4;
    const auto more = null_statistic_sample(scheme, StatisticKind::h(), config);
    REQUIRE(serial == more);
}

TEST_CASE("same seed reproduces the same run, different seed does not") {
    const auto scheme = catalog_scheme("[2]");
    MonteCarloConfig config;
    config.reps = 400;
    const auto a = null_statistic_sample(scheme, StatisticKind::greenwood(), config);
    const auto b = null_statistic_sample(scheme, StatisticKind::greenwood(), config);
    REQUIRE(a == b);
    config.seed = 43;
    const auto c = null_statistic_sample(scheme, StatisticKind::greenwood(), config);
    REQUIRE(a != c);
}

TEST_CASE("power grid agrees with single-cell power runs") {
    const auto scheme = catalog_scheme("[2]");
    MonteCarloConfig config;
    config.reps = 500;
    const std::vector<StatisticKind> kinds = {StatisticKind::h(), StatisticKind::greenwood()};
    const std::vector<DistributionFamily> alts = {DistributionFamily::student_t(3),
                                                  DistributionFamily::laplace()};
    const auto grid = power_study(scheme, kinds, alts, config);
    REQUIRE(grid.size() == 4);
    std::size_t idx = 0;
    for (const auto& alt : alts)
        for (const auto& kind : kinds) {
            const auto single = power(scheme, kind, alt, config);
            REQUIRE(grid[idx].estimate == single.estimate);
            REQUIRE(grid[idx].statistic == single.statistic);
            REQUIRE(grid[idx].alternative == single.alternative);
            ++idx;
        }
}

TEST_CASE("power under the null distribution sits near alpha") {
    MonteCarloConfig config;
    config.reps = 2000;
    const auto cell = power(catalog_scheme("[3]"), StatisticKind::h(),
                            DistributionFamily::normal(), config);
    REQUIRE(cell.estimate == Catch::Approx(config.alpha).margin(0.03));
    REQUIRE(cell.std_error == Catch::Approx(std::sqrt(cell.estimate * (1 - cell.estimate) /
                                                      config.reps))
                                  .epsilon(1e-12));
}

TEST_CASE("critical value of the benchmark scheme matches the reference table") {
    MonteCarloConfig config;
    const double cv = critical_value(catalog_scheme("[1]"), StatisticKind::h(), config);
    REQUIRE(cv == Catch::Approx(0.1069).margin(0.006));
}

TEST_CASE("mean H shrinks as the sample grows") {
    MonteCarloConfig config;
    config.reps = 2000;
    const auto cells =
        consistency_study(5, {10, 50}, {DistributionFamily::normal()}, config);
    REQUIRE(cells.size() == 2);
    REQUIRE(cells[0].estimate > cells[1].estimate);
    REQUIRE(cells[1].std_error > 0.0);
}

TEST_CASE("run_test produces a coherent report per statistic") {
    MonteCarloConfig config;
    config.reps = 500;
    const auto sample = wire_sample();
    const auto reports = run_test(sample, all_statistic_kinds(), config);
    REQUIRE(reports.size() == 12);
    for (const auto& report : reports) {
        REQUIRE(report.reps == 500);
        REQUIRE(report.scheme_label == "wire");
        REQUIRE(report.p_value > 0.0);
        REQUIRE(report.p_value <= 1.0);
        REQUIRE(report.reject == (report.observed > report.critical_value));
        REQUIRE(report.fit.converged);
    }
    // the H entry reproduces the one-shot statistic
    const auto t = transform(sample, fit_normal(sample));
    REQUIRE(reports.back().statistic == "H");
    REQUIRE(reports.back().observed == compute_statistic(t, StatisticKind::h()));
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "progof/censoring.hpp"
#include "progof/rng.hpp"
#include "progof/simulate.hpp"

using namespace progof;

namespace {

std::vector<std::vector<double>> draw_uniforms(const CensoringScheme& scheme, int reps,
                                               std::uint64_t seed) {
    const auto exponents = power_exponents(scheme);
    std::vector<std::vector<double>> draws(reps);
    std::vector<double> scratch;
    for (int i = 0; i < reps; ++i) {
        Rng rng(seed, scheme_hash(scheme), static_cast<std::uint64_t>(i));
        draws[i].resize(scheme.m);
        sample_uniform_progressive_into(exponents, rng, scratch, draws[i]);
    }
    return draws;
}

}  // namespace

TEST_CASE("progressive uniforms are sorted and inside the unit interval") {
    for (const auto& label : {"[3]", "[12]", "[24]"}) {
        const auto scheme = catalog_scheme(label);
        for (const auto& u : draw_uniforms(scheme, 200, 7)) {
            REQUIRE(std::is_sorted(u.begin(), u.end()));
            REQUIRE(u.front() > 0.0);
            REQUIRE(u.back() < 1.0);
        }
    }
}

TEST_CASE("mean simulated uniform matches the exact expectation") {
    // scheme [3] removes heavily at both ends, a good stress of the recursion
    const auto scheme = catalog_scheme("[3]");
    const int reps = 200000;
    const auto mu = expected_uniform(scheme).mu;
    const auto draws = draw_uniforms(scheme, reps, 11);

    for (int i = 0; i < scheme.m; ++i) {
        double mean = 0.0;
        for (const auto& u : draws) mean += u[i];
        mean /= reps;
        double var = 0.0;
        for (const auto& u : draws) var += (u[i] - mean) * (u[i] - mean);
        const double se = std::sqrt(var / reps / reps);
        INFO("coordinate " << i);
        REQUIRE(mean == Catch::Approx(mu[i]).margin(3.5 * se));
    }
}

TEST_CASE("complete samples reduce to plain uniform order statistics") {
    const auto scheme = validate_scheme(6, 6, std::vector<int>(6, 0), "complete");
    const int reps = 200000;
    const auto draws = draw_uniforms(scheme, reps, 13);
    for (int i = 0; i < 6; ++i) {
        double mean = 0.0;
        for (const auto& u : draws) mean += u[i];
        mean /= reps;
        // order statistic of 6 uniforms has mean i/7 and variance i(7-i)/(49*8)
        const double expect = (i + 1) / 7.0;
        const double se = std::sqrt((i + 1) * (6 - i) / (49.0 * 8.0) / reps);
        REQUIRE(mean == Catch::Approx(expect).margin(3.5 * se));
    }
}

TEST_CASE("draws are deterministic in seed, stream, index and attempt") {
    const auto scheme = catalog_scheme("[5]");
    const auto exponents = power_exponents(scheme);
    std::vector<double> scratch, a(scheme.m), b(scheme.m);

    Rng first(99, 1234, 0);
    Rng again(99, 1234, 0);
    sample_uniform_progressive_into(exponents, first, scratch, a);
    sample_uniform_progressive_into(exponents, again, scratch, b);
    REQUIRE(a == b);

    Rng other_index(99, 1234, 1);
    sample_uniform_progressive_into(exponents, other_index, scratch, b);
    REQUIRE(a != b);

    Rng other_attempt(99, 1234, 0, 1);
    sample_uniform_progressive_into(exponents, other_attempt, scratch, b);
    REQUIRE(a != b);
}

TEST_CASE("sampling a censored data set respects the scheme size") {
    const auto scheme = catalog_scheme("[8]");
    const auto family = DistributionFamily::normal();
    Rng rng(5, scheme_hash(scheme), 0);
    const auto sample = sample_progressive(scheme, family, rng);
    REQUIRE(static_cast<int>(sample.x.size()) == scheme.m);
    REQUIRE(std::is_sorted(sample.x.begin(), sample.x.end()));
    REQUIRE(sample.scheme.n == scheme.n);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "progof/distributions.hpp"
#include "progof/rng.hpp"

using namespace progof;

namespace {

const double kX[] = {-2.5, -1.0, -0.3, 0.7, 1.96, 3.2};
const double kP[] = {0.001, 0.1, 0.9, 0.975};

struct OracleRow {
    DistributionFamily family;
    double cdf[6];  // at kX
    double ppf[4];  // at kP
};

// reference values computed with an independent statistics package
const OracleRow kOracle[] = {
    {DistributionFamily::normal(),
     {0.006209665326, 0.158655253931, 0.382088577811, 0.758036347777, 0.975002104852,
      0.999312862062},
     {-3.090232306168, -1.281551565545, 1.281551565545, 1.959963984540}},
    {DistributionFamily::student_t(3),
     {0.043853323504, 0.195501109478, 0.391881646020, 0.732836500848, 0.927573895718,
      0.975334078519},
     {-10.214531852405, -1.637744353696, 1.637744353696, 3.182446305284}},
    {DistributionFamily::student_t(4),
     {0.033383272406, 0.186950483150, 0.389560714139, 0.738749917203, 0.939222680075,
      0.983549594700},
     {-7.173182219782, -1.533206274059, 1.533206274059, 2.776445105198}},
    {DistributionFamily::laplace(),
     {0.041042499312, 0.183939720586, 0.370409110341, 0.751707348104, 0.929570789539,
      0.979618898011},
     {-6.214608098422, -1.609437912434, 1.609437912434, 2.995732273554}},
    {DistributionFamily::logistic(),
     {0.075858180021, 0.268941421370, 0.425557483188, 0.668187772168, 0.876532952435,
      0.960834277203},
     {-6.906754778649, -2.197224577336, 2.197224577336, 3.663561646130}},
};

}  // namespace

TEST_CASE("cdf matches reference values for every family") {
    for (const auto& row : kOracle) {
        INFO(family_name(row.family));
        for (int i = 0; i < 6; ++i)
            REQUIRE(cdf(row.family, kX[i]) == Catch::Approx(row.cdf[i]).margin(1e-10));
    }
}

TEST_CASE("quantile matches reference values for every family") {
    for (const auto& row : kOracle) {
        INFO(family_name(row.family));
        for (int i = 0; i < 4; ++i)
            REQUIRE(quantile(row.family, kP[i]) == Catch::Approx(row.ppf[i]).margin(1e-8));
    }
}

TEST_CASE("cdf and quantile are inverse maps") {
    for (const auto& row : kOracle) {
        INFO(family_name(row.family));
        for (double p = 0.01; p < 1.0; p += 0.07) {
            const double x = quantile(row.family, p);
            REQUIRE(cdf(row.family, x) == Catch::Approx(p).margin(1e-8));
        }
    }
}

TEST_CASE("pdf is the derivative of the cdf") {
    const double h = 1e-6;
    for (const auto& row : kOracle) {
        INFO(family_name(row.family));
        for (double x : kX) {
            const double fd = (cdf(row.family, x + h) - cdf(row.family, x - h)) / (2 * h);
            REQUIRE(pdf(row.family, x) == Catch::Approx(fd).margin(1e-6));
        }
    }
}

TEST_CASE("location and scale shift the family as expected") {
    const auto shifted = DistributionFamily::normal(3.0, 2.0);
    const auto base = DistributionFamily::normal();
    REQUIRE(cdf(shifted, 3.0 + 2.0 * 1.1) == Catch::Approx(cdf(base, 1.1)).margin(1e-14));
    REQUIRE(quantile(shifted, 0.8) == Catch::Approx(3.0 + 2.0 * quantile(base, 0.8)).margin(1e-10));
}

TEST_CASE("samples follow the claimed distribution") {
    // probability integral transform: cdf(X) must be uniform on (0,1)
    const int n = 20000;
    for (const auto& row : kOracle) {
        INFO(family_name(row.family));
        Rng rng(2024, fnv1a(family_name(row.family)), 0);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += cdf(row.family, sample(row.family, rng));
        const double se = 1.0 / std::sqrt(12.0 * n);
        REQUIRE(sum / n == Catch::Approx(0.5).margin(4 * se));
    }
}

TEST_CASE("family names parse back to the same family") {
    for (const auto& name : {"normal", "t3", "t4", "laplace", "logistic"}) {
        REQUIRE(family_name(parse_family(name)) == name);
    }
    REQUIRE(family_name(parse_family("de")) == "laplace");
    REQUIRE_THROWS(parse_family("cauchyish"));
    REQUIRE_THROWS(parse_family("t0"));
}

TEST_CASE("quantile rejects probabilities outside (0,1)") {
    const auto normal = DistributionFamily::normal();
    REQUIRE_THROWS(quantile(normal, 0.0));
    REQUIRE_THROWS(quantile(normal, 1.0));
    REQUIRE_THROWS(quantile(normal, -0.2));
}

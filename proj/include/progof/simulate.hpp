#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "progof/censoring.hpp"
#include "progof/distributions.hpp"
#include "progof/rng.hpp"

namespace progof {

struct UniformProgressiveSample {
    CensoringScheme scheme;
    std::vector<double> u;  // strictly increasing in (0,1)
};

struct CensoredSample {
    CensoringScheme scheme;
    std::vector<double> x;  // nondecreasing observed failure values
};

// ---------------------------------------------------------------------------
// Uniform progressive order statistics by the product-of-powers construction:
//   W_j iid uniform,  V_j = W_j^(1/a_j),  U_i = 1 - prod_{j=m-i+1}^{m} V_j
// with a_j = j + sum of the last j removals.  O(m) per sample, and E[U_i]
// equals expected_uniform exactly, which the tests cross-check.
// ---------------------------------------------------------------------------

// Allocation-free core for the Monte Carlo loop; `scratch` holds the V_j.
inline void sample_uniform_progressive_into(std::span<const double> exponents, Rng& rng,
                                            std::vector<double>& scratch,
                                            std::vector<double>& u) {
    const int m = static_cast<int>(exponents.size());
    scratch.resize(m);
    u.resize(m);
    for (int j = 0; j < m; ++j) scratch[j] = std::pow(rng.uniform(), 1.0 / exponents[j]);
    double prod = 1.0;
    for (int i = 1; i <= m; ++i) {
        prod *= scratch[m - i];
        u[i - 1] = 1.0 - prod;
    }
}

inline UniformProgressiveSample sample_uniform_progressive(const CensoringScheme& scheme,
                                                           Rng& rng) {
    const auto a = power_exponents(scheme);
    UniformProgressiveSample out{scheme, {}};
    std::vector<double> scratch;
    sample_uniform_progressive_into(a, rng, scratch, out.u);
    return out;
}

inline CensoredSample sample_progressive(const CensoringScheme& scheme,
                                         const DistributionFamily& d, Rng& rng) {
    auto uniforms = sample_uniform_progressive(scheme, rng);
    CensoredSample out{scheme, std::move(uniforms.u)};
    for (double& value : out.x) value = quantile(d, value);
    return out;
}

}  // namespace progof

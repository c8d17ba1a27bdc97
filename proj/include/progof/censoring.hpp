#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "progof/errors.hpp"
#include "progof/rng.hpp"

namespace progof {

// ---------------------------------------------------------------------------
// Progressive Type-II censoring scheme: n units on test, m observed failures,
// r[i] units withdrawn at the i-th failure.  m + sum(r) = n.
// ---------------------------------------------------------------------------
struct CensoringScheme {
    int n = 0;
    int m = 0;
    std::vector<int> r;
    std::string label;  // catalog tag such as "[15]", kept in all outputs
};

// gamma[i] = units still on test just before the (i+1)-th failure.
// gamma_1 = n, gamma_m = r_m + 1.
inline std::vector<int> gamma_coefficients(const CensoringScheme& s) {
    std::vector<int> gamma(s.m);
    int removed = 0;
    for (int i = 0; i < s.m; ++i) {
        gamma[i] = s.n - i - removed;
        removed += s.r[i];
    }
    return gamma;
}

inline CensoringScheme validate_scheme(int n, int m, std::vector<int> r,
                                       std::string label = {}) {
    if (m <= 0) throw EmptyScheme("censoring scheme needs m >= 1, got m=" + std::to_string(m));
    if (static_cast<int>(r.size()) != m)
        throw SchemeInconsistent("removal vector has " + std::to_string(r.size()) +
                                 " entries, expected m=" + std::to_string(m));
    long long total = m;
    for (int ri : r) {
        if (ri < 0) throw SchemeInconsistent("negative removal count");
        total += ri;
    }
    if (total != n)
        throw SchemeInconsistent("m + sum(r) = " + std::to_string(total) +
                                 " but n = " + std::to_string(n));
    CensoringScheme s{n, m, std::move(r), std::move(label)};
    const auto gamma = gamma_coefficients(s);
    for (int i = 0; i < m; ++i) {
        if (gamma[i] < s.r[i] + 1)
            throw SchemeInfeasible("cannot remove " + std::to_string(s.r[i]) +
                                   " units at failure " + std::to_string(i + 1) + ": only " +
                                   std::to_string(gamma[i]) + " remain");
    }
    return s;
}

// Exponents a_j = j + sum of the last j removals; these drive both the
// expected values and the sample generator.  a_j equals gamma reversed.
inline std::vector<double> power_exponents(const CensoringScheme& s) {
    const auto gamma = gamma_coefficients(s);
    std::vector<double> a(s.m);
    for (int j = 0; j < s.m; ++j) a[j] = static_cast<double>(gamma[s.m - 1 - j]);
    return a;
}

// ---------------------------------------------------------------------------
// Expected uniform progressive order statistics mu_i = E[U_{i:m:n}].
//
//   mu_i = 1 - prod_{j=m-i+1}^{m} a_j/(a_j+1),  a_j = j + sum_{k=m-j+1}^{m} r_k
//
// which reduces to i/(m+1) for complete data and gives mu_1 = 1/(n+1) for
// every scheme.
// ---------------------------------------------------------------------------
struct ExpectedUniforms {
    std::vector<double> mu;
};

inline ExpectedUniforms expected_uniform(const CensoringScheme& s) {
    const auto gamma = gamma_coefficients(s);
    ExpectedUniforms out;
    out.mu.resize(s.m);
    double prod = 1.0;
    for (int i = 0; i < s.m; ++i) {
        const double g = static_cast<double>(gamma[i]);
        prod *= g / (g + 1.0);
        out.mu[i] = 1.0 - prod;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scheme families used by the consistency study.
//   1: constant removal r_i = 1           (n = 2m)
//   2: increasing removal r_i = i         (n = m(m+3)/2)
//   3: decreasing removal r_i = m - i + 1 (n = m(m+3)/2)
//   4: Type-II censoring r_m = m/5        (n = 1.2m, m divisible by 5)
//   5: complete data                      (n = m)
// ---------------------------------------------------------------------------
inline CensoringScheme scheme_family(int family, int m) {
    if (m < 1) throw EmptyScheme("scheme_family needs m >= 1");
    std::vector<int> r(m, 0);
    switch (family) {
        case 1:
            for (auto& x : r) x = 1;
            break;
        case 2:
            for (int i = 0; i < m; ++i) r[i] = i + 1;
            break;
        case 3:
            for (int i = 0; i < m; ++i) r[i] = m - i;
            break;
        case 4:
            if (m % 5 != 0)
                throw IndivisibleM("family 4 needs m divisible by 5, got m=" + std::to_string(m));
            r[m - 1] = m / 5;
            break;
        case 5:
            break;
        default:
            throw DomainError("scheme family must be 1..5, got " + std::to_string(family));
    }
    const int n = m + std::accumulate(r.begin(), r.end(), 0);
    return validate_scheme(n, m, std::move(r), "family" + std::to_string(family) +
                                                   ":m=" + std::to_string(m));
}

// The 27 benchmark schemes, labels "[1]".."[27]".
inline std::vector<CensoringScheme> catalog_table6() {
    std::vector<CensoringScheme> out;
    out.reserve(27);
    int next = 1;
    auto add = [&](int n, int m, std::vector<int> r) {
        out.push_back(validate_scheme(n, m, std::move(r),
                                      "[" + std::to_string(next++) + "]"));
    };
    auto at = [](int m, std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> r(m, 0);
        for (auto [pos, val] : entries) r[pos - 1] = val;
        return r;
    };

    add(20, 8, at(8, {{1, 12}}));                      // [1]
    add(20, 8, at(8, {{8, 12}}));                      // [2]
    add(20, 8, at(8, {{1, 6}, {8, 6}}));               // [3]
    add(20, 12, at(12, {{1, 8}}));                     // [4]
    add(20, 12, at(12, {{12, 8}}));                    // [5]
    add(20, 12, at(12, {{3, 2}, {5, 2}, {7, 2}, {9, 2}}));  // [6]
    add(20, 16, at(16, {{1, 4}}));                     // [7]
    add(20, 16, at(16, {{16, 4}}));                    // [8]
    add(20, 16, at(16, {{5, 4}}));                     // [9]
    add(40, 10, at(10, {{1, 30}}));                    // [10]
    add(40, 10, at(10, {{10, 30}}));                   // [11]
    add(40, 10, at(10, {{1, 10}, {5, 10}, {10, 10}})); // [12]
    add(40, 20, at(20, {{1, 20}}));                    // [13]
    add(40, 20, at(20, {{20, 20}}));                   // [14]
    add(40, 20, std::vector<int>(20, 1));              // [15]
    add(40, 30, at(30, {{1, 10}}));                    // [16]
    add(40, 30, at(30, {{30, 10}}));                   // [17]
    add(40, 30, at(30, {{1, 5}, {30, 5}}));            // [18]
    add(60, 20, at(20, {{1, 40}}));                    // [19]
    add(60, 20, at(20, {{20, 40}}));                   // [20]
    add(60, 20, at(20, {{1, 10}, {10, 20}, {20, 10}}));// [21]
    add(60, 40, at(40, {{1, 20}}));                    // [22]
    add(60, 40, at(40, {{40, 20}}));                   // [23]
    {
        std::vector<int> r(40, 0);
        for (int i = 0; i < 40; i += 2) r[i] = 1;      // [24]
        add(60, 40, std::move(r));
    }
    add(60, 50, at(50, {{1, 10}}));                    // [25]
    add(60, 50, at(50, {{50, 10}}));                   // [26]
    add(60, 50, at(50, {{1, 5}, {50, 5}}));            // [27]
    return out;
}

inline CensoringScheme catalog_scheme(const std::string& label) {
    for (auto& s : catalog_table6())
        if (s.label == label) return s;
    throw std::invalid_argument("unknown catalog scheme " + label);
}

// Text form "0,2,1,0,3,0,0,2,0,2" used by the CLI and data files.
inline std::vector<int> parse_removals(const std::string& text) {
    std::vector<int> r;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad removal count '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw ParseError("bad removal count '" + tok + "'");
        r.push_back(v);
    }
    if (r.empty()) throw ParseError("empty removal list");
    return r;
}

inline std::string format_removals(const std::vector<int>& r) {
    std::string out;
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r[i]);
    }
    return out;
}

// Stable hash of (n, m, r), used for cache keys and stream tags.
inline std::uint64_t scheme_hash(const CensoringScheme& s) {
    std::uint64_t h = fnv1a("scheme");
    h = fnv1a_mix(h, static_cast<std::uint64_t>(s.n));
    h = fnv1a_mix(h, static_cast<std::uint64_t>(s.m));
    for (int ri : s.r) h = fnv1a_mix(h, static_cast<std::uint64_t>(ri));
    return h;
}

}  // namespace progof

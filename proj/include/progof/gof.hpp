#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "progof/censoring.hpp"
#include "progof/errors.hpp"
#include "progof/mle.hpp"
#include "progof/simulate.hpp"

namespace progof {

// ---------------------------------------------------------------------------
// Statistic kinds
// ---------------------------------------------------------------------------

struct StatisticKind {
    enum class Tag { CPlus, CMinus, C, K, T1, T2, Greenwood, QM, GreenwoodK, BalakrishnanT, H };

    Tag tag = Tag::H;
    int k = 0;  // step size, GreenwoodK only

    static StatisticKind c_plus() { return {Tag::CPlus, 0}; }
    static StatisticKind c_minus() { return {Tag::CMinus, 0}; }
    static StatisticKind c() { return {Tag::C, 0}; }
    static StatisticKind kuiper() { return {Tag::K, 0}; }
    static StatisticKind t1() { return {Tag::T1, 0}; }
    static StatisticKind t2() { return {Tag::T2, 0}; }
    static StatisticKind greenwood() { return {Tag::Greenwood, 0}; }
    static StatisticKind qm() { return {Tag::QM, 0}; }
    static StatisticKind greenwood_k(int k) {
        if (k < 2) throw std::invalid_argument("greenwood_k needs k >= 2");
        return {Tag::GreenwoodK, k};
    }
    static StatisticKind balakrishnan_t() { return {Tag::BalakrishnanT, 0}; }
    static StatisticKind h() { return {Tag::H, 0}; }

    friend bool operator==(const StatisticKind& a, const StatisticKind& b) {
        return a.tag == b.tag && a.k == b.k;
    }
};

// The twelve statistics in report column order.
inline std::vector<StatisticKind> all_statistic_kinds() {
    return {StatisticKind::c_plus(),    StatisticKind::c_minus(),
            StatisticKind::c(),         StatisticKind::kuiper(),
            StatisticKind::t1(),        StatisticKind::t2(),
            StatisticKind::greenwood(), StatisticKind::qm(),
            StatisticKind::greenwood_k(2), StatisticKind::greenwood_k(3),
            StatisticKind::balakrishnan_t(), StatisticKind::h()};
}

inline std::string statistic_name(const StatisticKind& kind) {
    switch (kind.tag) {
        case StatisticKind::Tag::CPlus: return "C+";
        case StatisticKind::Tag::CMinus: return "C-";
        case StatisticKind::Tag::C: return "C";
        case StatisticKind::Tag::K: return "K";
        case StatisticKind::Tag::T1: return "T1";
        case StatisticKind::Tag::T2: return "T2";
        case StatisticKind::Tag::Greenwood: return "G";
        case StatisticKind::Tag::QM: return "Q";
        case StatisticKind::Tag::GreenwoodK: return "G" + std::to_string(kind.k);
        case StatisticKind::Tag::BalakrishnanT: return "T";
        case StatisticKind::Tag::H: return "H";
    }
    throw std::logic_error("unreachable statistic tag");
}

inline StatisticKind parse_statistic(const std::string& name) {
    if (name == "C+") return StatisticKind::c_plus();
    if (name == "C-") return StatisticKind::c_minus();
    if (name == "C") return StatisticKind::c();
    if (name == "K") return StatisticKind::kuiper();
    if (name == "T1") return StatisticKind::t1();
    if (name == "T2") return StatisticKind::t2();
    if (name == "G") return StatisticKind::greenwood();
    if (name == "Q") return StatisticKind::qm();
    if (name == "T") return StatisticKind::balakrishnan_t();
    if (name == "H") return StatisticKind::h();
    if (name.size() > 1 && name[0] == 'G') {
        int k = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw ParseError("unknown statistic: " + name);
            k = k * 10 + (name[i] - '0');
        }
        if (k < 2) throw ParseError("k-step Greenwood statistic needs k >= 2: " + name);
        return StatisticKind::greenwood_k(k);
    }
    throw ParseError("unknown statistic: " + name);
}

// ---------------------------------------------------------------------------
// Probability-scale transform
// ---------------------------------------------------------------------------

struct TransformedSample {
    CensoringScheme scheme;
    std::vector<double> u;   // F0(x[i]; mu_hat, sigma_hat), clamped away from {0,1}
    ExpectedUniforms mu;
    std::vector<double> v;   // u[i] - mu[i]
};

inline TransformedSample transform(const CensoredSample& sample, const LocationScaleFit& fit) {
    TransformedSample t{sample.scheme, {}, expected_uniform(sample.scheme), {}};
    const size_t m = sample.x.size();
    t.u.resize(m);
    t.v.resize(m);
    for (size_t i = 0; i < m; ++i) {
        const double z = (sample.x[i] - fit.mu_hat) / fit.sigma_hat;
        t.u[i] = std::clamp(detail::normal_cdf_std(z), 1e-15, 1.0 - 1e-15);
        t.v[i] = t.u[i] - t.mu.mu[i];
    }
    return t;
}

// ---------------------------------------------------------------------------
// Statistic kernels
// ---------------------------------------------------------------------------

struct EdfStatistics {
    double c_plus, c_minus, c, k, t1, t2;
};

inline EdfStatistics edf_statistics(const TransformedSample& t) {
    double vmax = 0.0, vmin = 0.0, sum_sq = 0.0, sum_abs = 0.0;
    bool first = true;
    for (double v : t.v) {
        if (first) {
            vmax = vmin = v;
            first = false;
        } else {
            vmax = std::max(vmax, v);
            vmin = std::min(vmin, v);
        }
        sum_sq += v * v;
        sum_abs += std::fabs(v);
    }
    const double m = static_cast<double>(t.v.size());
    EdfStatistics s;
    s.c_plus = vmax;
    s.c_minus = -vmin;
    s.c = std::max(s.c_plus, s.c_minus);
    s.k = s.c_plus + s.c_minus;
    s.t1 = sum_sq / m;
    s.t2 = sum_abs / m;
    return s;
}

// One-step spacings S_i = gamma_i (u[i] - u[i-1]), u[0] = 0.
inline std::vector<double> spacings(const TransformedSample& t) {
    const auto gamma = gamma_coefficients(t.scheme);
    const size_t m = t.u.size();
    std::vector<double> s(m);
    double prev = 0.0;
    for (size_t i = 0; i < m; ++i) {
        s[i] = gamma[i] * (t.u[i] - prev);
        prev = t.u[i];
    }
    return s;
}

// Overlapping k-step spacings S_i = gamma_i (u[i+k-1] - u[i-1]), with the
// convention u[l] = 1 for l > m.
inline std::vector<double> spacings_k(const TransformedSample& t, int k) {
    if (k < 2) throw std::invalid_argument("spacings_k needs k >= 2");
    const auto gamma = gamma_coefficients(t.scheme);
    const int m = static_cast<int>(t.u.size());
    std::vector<double> s(m);
    for (int i = 1; i <= m; ++i) {
        const double lo = i >= 2 ? t.u[i - 2] : 0.0;
        const double hi = i + k - 1 <= m ? t.u[i + k - 2] : 1.0;
        s[i - 1] = gamma[i - 1] * (hi - lo);
    }
    return s;
}

inline double greenwood(const std::vector<double>& s) {
    double g = 0.0;
    for (double si : s) g += si * si;
    return g;
}

inline double qm(const std::vector<double>& s) {
    double q = greenwood(s);
    for (size_t i = 0; i + 1 < s.size(); ++i) q += s[i] * s[i + 1];
    return q;
}

inline double greenwood_k(const std::vector<double>& sk) { return greenwood(sk); }

// T = sum_{i=2}^{m-1} (m-i) G_i / [(m-2) sum_{i=2}^{m} G_i] with
// G_i = (u[i]-u[i-1]) / (mu[i]-mu[i-1]).
inline double balakrishnan_t(const TransformedSample& t) {
    const int m = static_cast<int>(t.u.size());
    if (m < 3) throw std::invalid_argument("T statistic needs m >= 3");
    double num = 0.0, den = 0.0;
    for (int i = 2; i <= m; ++i) {
        const double gi = (t.u[i - 1] - t.u[i - 2]) / (t.mu.mu[i - 1] - t.mu.mu[i - 2]);
        if (i <= m - 1) num += (m - i) * gi;
        den += gi;
    }
    if (den == 0.0) throw DegenerateDenominator("T statistic: all increments are zero");
    return num / ((m - 2) * den);
}

inline double h_kernel(double x) {
    if (!(x > 0.0)) throw DomainError("h kernel needs x > 0");
    return (x - 1.0) * (x - 1.0) / (x * x + 1.0);
}

inline double h_statistic(const TransformedSample& t) {
    double sum = 0.0;
    const size_t m = t.u.size();
    for (size_t i = 0; i < m; ++i) sum += h_kernel(t.u[i] / t.mu.mu[i]);
    return sum / static_cast<double>(m);
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline double compute_statistic(const TransformedSample& t, const StatisticKind& kind) {
    switch (kind.tag) {
        case StatisticKind::Tag::CPlus: return edf_statistics(t).c_plus;
        case StatisticKind::Tag::CMinus: return edf_statistics(t).c_minus;
        case StatisticKind::Tag::C: return edf_statistics(t).c;
        case StatisticKind::Tag::K: return edf_statistics(t).k;
        case StatisticKind::Tag::T1: return edf_statistics(t).t1;
        case StatisticKind::Tag::T2: return edf_statistics(t).t2;
        case StatisticKind::Tag::Greenwood: return greenwood(spacings(t));
        case StatisticKind::Tag::QM: return qm(spacings(t));
        case StatisticKind::Tag::GreenwoodK: return greenwood_k(spacings_k(t, kind.k));
        case StatisticKind::Tag::BalakrishnanT: return balakrishnan_t(t);
        case StatisticKind::Tag::H: return h_statistic(t);
    }
    throw std::logic_error("unreachable statistic tag");
}

inline double compute_statistic(const CensoredSample& sample, const StatisticKind& kind) {
    return compute_statistic(transform(sample, fit_normal(sample)), kind);
}

}  // namespace progof

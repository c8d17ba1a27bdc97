#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "progof/errors.hpp"
#include "progof/rng.hpp"

namespace progof {

namespace detail {

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

inline double normal_pdf_std(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

inline double normal_cdf_std(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

// Hazard of the standard normal, lambda(z) = phi(z) / (1 - Phi(z)).
// Direct ratio up to z = 8; beyond that the continued fraction
// lambda(z) = z + 1/(z + 2/(z + 3/(z + ...))) avoids 0/0.
inline double mills_lambda(double z) {
    if (z <= 8.0) return normal_pdf_std(z) / (0.5 * std::erfc(z / kSqrt2));
    double tail = 0.0;
    for (int k = 64; k >= 1; --k) tail = static_cast<double>(k) / (z + tail);
    return z + tail;
}

// log(1 - Phi(z)); switches to the hazard form once erfc would lose accuracy.
inline double normal_log_sf(double z) {
    if (z < 26.0) return std::log(0.5 * std::erfc(z / kSqrt2));
    return -0.5 * z * z - kLogSqrt2Pi - std::log(mills_lambda(z));
}

// Inverse standard normal CDF: Acklam's rational approximation polished by
// one Newton step, absolute error well under 1e-9.
inline double normal_quantile_std(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double err = normal_cdf_std(x) - p;
    x -= err / normal_pdf_std(x);
    return x;
}

// Regularized incomplete beta I_x(a,b) via the standard continued fraction
// (modified Lentz), symmetric switch at x = (a+1)/(a+b+2).
inline double ibeta_cf(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-15;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double f = d;
    for (int k = 1; k <= 300; ++k) {
        const double dk = static_cast<double>(k);
        // even-numbered coefficient
        double num = dk * (b - dk) * x / ((a + 2.0 * dk - 1.0) * (a + 2.0 * dk));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        f *= c * d;
        // odd-numbered coefficient
        num = -(a + dk) * (a + b + dk) * x / ((a + 2.0 * dk) * (a + 2.0 * dk + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < eps) break;
    }
    return f;
}

inline double ibeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * ibeta_cf(a, b, x) / a;
    return 1.0 - front * ibeta_cf(b, a, 1.0 - x) / b;
}

inline double student_t_cdf_std(double x, double nu) {
    if (x == 0.0) return 0.5;
    const double tail = 0.5 * ibeta(0.5 * nu, 0.5, nu / (nu + x * x));
    return x > 0.0 ? 1.0 - tail : tail;
}

inline double student_t_pdf_std(double x, double nu) {
    const double lg = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                      0.5 * std::log(nu * M_PI);
    return std::exp(lg - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

// Inverse t CDF: Newton from a normal start with a bisection safeguard.
inline double student_t_quantile_std(double p, double nu) {
    if (p == 0.5) return 0.0;
    double lo = -1.0, hi = 1.0;
    while (student_t_cdf_std(lo, nu) > p) lo *= 2.0;
    while (student_t_cdf_std(hi, nu) < p) hi *= 2.0;
    double x = normal_quantile_std(p);
    if (x < lo || x > hi) x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double err = student_t_cdf_std(x, nu) - p;
        if (std::fabs(err) < 1e-13) return x;
        if (err > 0.0) hi = x; else lo = x;
        const double step = err / student_t_pdf_std(x, nu);
        double next = x - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-14 * (1.0 + std::fabs(x))) return x;
        x = next;
    }
    return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Location-scale families: the null model (normal) and the alternatives.
// ---------------------------------------------------------------------------
enum class DistKind { Normal, StudentT, Logistic, Laplace };

struct DistributionFamily {
    DistKind kind = DistKind::Normal;
    double nu = 0.0;  // StudentT only
    double mu = 0.0;
    double sigma = 1.0;

    static DistributionFamily normal(double mu = 0.0, double sigma = 1.0) {
        return make(DistKind::Normal, 0.0, mu, sigma);
    }
    static DistributionFamily student_t(double nu, double mu = 0.0, double sigma = 1.0) {
        if (!(nu > 0.0)) throw DomainError("student t needs nu > 0");
        return make(DistKind::StudentT, nu, mu, sigma);
    }
    static DistributionFamily logistic(double mu = 0.0, double sigma = 1.0) {
        return make(DistKind::Logistic, 0.0, mu, sigma);
    }
    static DistributionFamily laplace(double mu = 0.0, double sigma = 1.0) {
        return make(DistKind::Laplace, 0.0, mu, sigma);
    }

private:
    static DistributionFamily make(DistKind k, double nu, double mu, double sigma) {
        if (!(sigma > 0.0)) throw DomainError("scale must be positive");
        DistributionFamily d;
        d.kind = k;
        d.nu = nu;
        d.mu = mu;
        d.sigma = sigma;
        return d;
    }
};

inline double pdf(const DistributionFamily& d, double x) {
    const double z = (x - d.mu) / d.sigma;
    switch (d.kind) {
        case DistKind::Normal:
            return detail::normal_pdf_std(z) / d.sigma;
        case DistKind::StudentT:
            return detail::student_t_pdf_std(z, d.nu) / d.sigma;
        case DistKind::Logistic: {
            const double e = std::exp(-std::fabs(z));
            return e / (d.sigma * (1.0 + e) * (1.0 + e));
        }
        case DistKind::Laplace:
            return 0.5 * std::exp(-std::fabs(z)) / d.sigma;
    }
    return 0.0;
}

inline double cdf(const DistributionFamily& d, double x) {
    const double z = (x - d.mu) / d.sigma;
    switch (d.kind) {
        case DistKind::Normal:
            return detail::normal_cdf_std(z);
        case DistKind::StudentT:
            return detail::student_t_cdf_std(z, d.nu);
        case DistKind::Logistic:
            return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z))
                            : std::exp(z) / (1.0 + std::exp(z));
        case DistKind::Laplace:
            return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    }
    return 0.0;
}

inline double quantile(const DistributionFamily& d, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile needs p in (0,1)");
    double z = 0.0;
    switch (d.kind) {
        case DistKind::Normal:
            z = detail::normal_quantile_std(p);
            break;
        case DistKind::StudentT:
            z = detail::student_t_quantile_std(p, d.nu);
            break;
        case DistKind::Logistic:
            z = std::log(p / (1.0 - p));
            break;
        case DistKind::Laplace:
            z = p < 0.5 ? std::log(2.0 * p) : -std::log(2.0 * (1.0 - p));
            break;
    }
    return d.mu + d.sigma * z;
}

// Inverse-transform draw, so one uniform stream drives everything.
inline double sample(const DistributionFamily& d, Rng& rng) {
    return quantile(d, rng.uniform());
}

inline std::string family_name(const DistributionFamily& d) {
    std::string base;
    switch (d.kind) {
        case DistKind::Normal: base = "normal"; break;
        case DistKind::Logistic: base = "logistic"; break;
        case DistKind::Laplace: base = "laplace"; break;
        case DistKind::StudentT: {
            const double rounded = std::round(d.nu);
            if (std::fabs(d.nu - rounded) < 1e-12) {
                base = "t" + std::to_string(static_cast<long long>(rounded));
            } else {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "t(%g)", d.nu);
                base = buf;
            }
            break;
        }
    }
    if (d.mu != 0.0 || d.sigma != 1.0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), ":%g:%g", d.mu, d.sigma);
        base += buf;
    }
    return base;
}

// Accepts "normal", "t3", "t(2.5)", "logistic", "laplace", each with an
// optional location/scale suffix "name:mu:sigma".
inline DistributionFamily parse_family(const std::string& text) {
    std::string name = text;
    double mu = 0.0, sigma = 1.0;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        const std::string rest = text.substr(colon + 1);
        const auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw std::invalid_argument("expected name:mu:sigma in '" + text + "'");
        try {
            mu = std::stod(rest.substr(0, colon2));
            sigma = std::stod(rest.substr(colon2 + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad location/scale in '" + text + "'");
        }
    }
    if (name == "normal") return DistributionFamily::normal(mu, sigma);
    if (name == "logistic") return DistributionFamily::logistic(mu, sigma);
    if (name == "laplace" || name == "de") return DistributionFamily::laplace(mu, sigma);
    if (name.size() > 1 && name[0] == 't') {
        std::string arg = name.substr(1);
        if (arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
        try {
            return DistributionFamily::student_t(std::stod(arg), mu, sigma);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            // fall through to the unknown-name error
        }
    }
    throw std::invalid_argument("unknown alternative '" + text + "'");
}

}  // namespace progof

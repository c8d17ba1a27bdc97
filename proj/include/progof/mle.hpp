#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <utility>

#include "progof/distributions.hpp"
#include "progof/errors.hpp"
#include "progof/simulate.hpp"

namespace progof {

// Normal hazard phi(z)/(1-Phi(z)); far-tail safe.
inline double mills_lambda(double z) { return detail::mills_lambda(z); }

struct LocationScaleFit {
    double mu_hat = 0.0;
    double sigma_hat = 1.0;
    double loglik = 0.0;
    bool converged = false;
    int iterations = 0;
    double grad_norm = 0.0;
};

namespace detail {

// Log-likelihood of a progressively censored normal sample, without the
// scheme-dependent combinatorial constant:
//   l = sum_i [ log phi(z_i) - log sigma + r_i log(1 - Phi(z_i)) ]
inline double censored_normal_loglik(std::span<const double> x, std::span<const int> r,
                                     double mu, double sigma) {
    const double log_sigma = std::log(sigma);
    double ll = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double z = (x[i] - mu) / sigma;
        ll += -0.5 * z * z - kLogSqrt2Pi - log_sigma;
        if (r[i] > 0) ll += r[i] * normal_log_sf(z);
    }
    return ll;
}

// Analytic partials in (mu, sigma):
//   dl/dmu    = sum [ z/sigma + (r/sigma) lambda(z) ]
//   dl/dsigma = sum [ (z^2 - 1)/sigma + (r z/sigma) lambda(z) ]
inline void censored_normal_grad(std::span<const double> x, std::span<const int> r,
                                 double mu, double sigma, double& dmu, double& dsigma) {
    double gm = 0.0, gs = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double z = (x[i] - mu) / sigma;
        gm += z;
        gs += z * z - 1.0;
        if (r[i] > 0) {
            const double lam = mills_lambda(z);
            gm += r[i] * lam;
            gs += r[i] * z * lam;
        }
    }
    dmu = gm / sigma;
    dsigma = gs / sigma;
}

// Value and gradient in the optimization coordinates (mu, s = log sigma);
// shares the per-observation tail evaluations.
inline double loglik_value_grad_musig(std::span<const double> x, std::span<const int> r,
                                      double mu, double s, double& gmu, double& gs) {
    const double sigma = std::exp(s);
    double ll = 0.0, gm = 0.0, gsig = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double z = (x[i] - mu) / sigma;
        ll += -0.5 * z * z - kLogSqrt2Pi - s;
        gm += z;
        gsig += z * z - 1.0;
        if (r[i] > 0) {
            double lam, log_sf;
            if (z < 26.0) {
                const double sf = 0.5 * std::erfc(z / kSqrt2);
                lam = z <= 8.0 ? normal_pdf_std(z) / sf : mills_lambda(z);
                log_sf = std::log(sf);
            } else {
                lam = mills_lambda(z);
                log_sf = -0.5 * z * z - kLogSqrt2Pi - std::log(lam);
            }
            ll += r[i] * log_sf;
            gm += r[i] * lam;
            gsig += r[i] * z * lam;
        }
    }
    gmu = gm / sigma;
    gs = gsig;  // d/ds = sigma * d/dsigma
    return ll;
}

// Newton ascent on (mu, log sigma) with a numerically differenced Hessian and
// a halving line search; 200 Nelder-Mead iterations take over if Newton
// stalls.  Initial point: observed mean and standard deviation (divisor m),
// which is already the optimum for complete data.
inline LocationScaleFit fit_censored_normal(std::span<const double> x, std::span<const int> r) {
    const size_t m = x.size();
    if (m < 2) throw DegenerateSample("need at least 2 observations to fit");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(m);
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= static_cast<double>(m);
    if (!(var > 0.0)) throw DegenerateSample("zero sample variance");

    constexpr int kMaxIter = 200;
    constexpr double kGradTol = 1e-8;
    constexpr double kStepTol = 1e-10;

    double mu = mean, s = 0.5 * std::log(var);
    double gmu, gs;
    double ll = loglik_value_grad_musig(x, r, mu, s, gmu, gs);

    auto scaled_tol = [&](double value) { return kGradTol * std::max(1.0, std::fabs(value)); };
    auto grad_norm = [&] { return std::hypot(gmu, gs); };

    int iter = 0;
    bool used_nelder_mead = false;
    bool tiny_step = false;
    while (iter < kMaxIter && grad_norm() > scaled_tol(ll)) {
        ++iter;
        // Central-difference Hessian of the gradient.
        const double hm = 1e-5 * std::max(1.0, std::fabs(mu));
        const double hs = 1e-5 * std::max(1.0, std::fabs(s));
        double gpm, gps, gmm, gms;
        double tmp_mu, tmp_s;
        loglik_value_grad_musig(x, r, mu + hm, s, gpm, gps);
        loglik_value_grad_musig(x, r, mu - hm, s, gmm, gms);
        const double h00 = (gpm - gmm) / (2.0 * hm);
        const double h10a = (gps - gms) / (2.0 * hm);
        loglik_value_grad_musig(x, r, mu, s + hs, tmp_mu, tmp_s);
        double h01 = tmp_mu, h11 = tmp_s;
        loglik_value_grad_musig(x, r, mu, s - hs, tmp_mu, tmp_s);
        h01 = (h01 - tmp_mu) / (2.0 * hs);
        h11 = (h11 - tmp_s) / (2.0 * hs);
        const double h01s = 0.5 * (h01 + h10a);

        // Newton direction -H^{-1} g, falling back to scaled steepest ascent
        // when the Hessian is not usable as a descent metric.
        const double det = h00 * h11 - h01s * h01s;
        double dmu, ds;
        bool have_newton = std::isfinite(det) && h00 < 0.0 && det > 0.0;
        if (have_newton) {
            dmu = -(h11 * gmu - h01s * gs) / det;
            ds = -(-h01s * gmu + h00 * gs) / det;
            if (dmu * gmu + ds * gs <= 0.0) have_newton = false;
        }
        if (!have_newton) {
            const double norm = grad_norm();
            dmu = gmu / norm * std::max(1e-3, std::exp(s) * 0.1);
            ds = gs / norm * 0.1;
        }

        double step = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 30; ++halving) {
            const double mu_try = mu + step * dmu;
            const double s_try = s + step * ds;
            double gmu_try, gs_try;
            const double ll_try = loglik_value_grad_musig(x, r, mu_try, s_try, gmu_try, gs_try);
            if (std::isfinite(ll_try) && ll_try > ll) {
                mu = mu_try;
                s = s_try;
                ll = ll_try;
                gmu = gmu_try;
                gs = gs_try;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        // After 30 halvings step is 2^-30; if even that step is below the
        // tolerance the iterate cannot move, which counts as convergence
        // whether or not the last tiny move improved.
        const double step_norm = step * std::hypot(dmu, ds);
        if (step_norm <= kStepTol) {
            tiny_step = true;
            break;
        }
        if (!improved) {
            if (used_nelder_mead) break;  // stalled twice, give up
            used_nelder_mead = true;
            // Nelder-Mead restart around the current point.
            struct Vertex {
                double mu, s, ll;
            };
            auto eval = [&](double vm, double vs) {
                double g1, g2;
                return loglik_value_grad_musig(x, r, vm, vs, g1, g2);
            };
            std::array<Vertex, 3> simplex{
                Vertex{mu, s, ll},
                Vertex{mu + 0.1 * std::max(1.0, std::fabs(mu)), s, 0.0},
                Vertex{mu, s + 0.1, 0.0}};
            simplex[1].ll = eval(simplex[1].mu, simplex[1].s);
            simplex[2].ll = eval(simplex[2].mu, simplex[2].s);
            for (int it = 0; it < 200; ++it) {
                std::sort(simplex.begin(), simplex.end(),
                          [](const Vertex& a, const Vertex& b) { return a.ll > b.ll; });
                const double cm = 0.5 * (simplex[0].mu + simplex[1].mu);
                const double cs = 0.5 * (simplex[0].s + simplex[1].s);
                Vertex refl{cm + (cm - simplex[2].mu), cs + (cs - simplex[2].s), 0.0};
                refl.ll = eval(refl.mu, refl.s);
                if (refl.ll > simplex[0].ll) {
                    Vertex exp_{cm + 2.0 * (cm - simplex[2].mu), cs + 2.0 * (cs - simplex[2].s), 0.0};
                    exp_.ll = eval(exp_.mu, exp_.s);
                    simplex[2] = exp_.ll > refl.ll ? exp_ : refl;
                } else if (refl.ll > simplex[1].ll) {
                    simplex[2] = refl;
                } else {
                    Vertex contr{cm + 0.5 * (simplex[2].mu - cm), cs + 0.5 * (simplex[2].s - cs), 0.0};
                    contr.ll = eval(contr.mu, contr.s);
                    if (contr.ll > simplex[2].ll) {
                        simplex[2] = contr;
                    } else {
                        for (int k = 1; k < 3; ++k) {
                            simplex[k].mu = 0.5 * (simplex[k].mu + simplex[0].mu);
                            simplex[k].s = 0.5 * (simplex[k].s + simplex[0].s);
                            simplex[k].ll = eval(simplex[k].mu, simplex[k].s);
                        }
                    }
                }
            }
            std::sort(simplex.begin(), simplex.end(),
                      [](const Vertex& a, const Vertex& b) { return a.ll > b.ll; });
            if (simplex[0].ll > ll) {
                mu = simplex[0].mu;
                s = simplex[0].s;
                ll = loglik_value_grad_musig(x, r, mu, s, gmu, gs);
            }
        }
    }

    LocationScaleFit fit;
    fit.mu_hat = mu;
    fit.sigma_hat = std::exp(s);
    fit.loglik = ll;
    fit.iterations = iter;
    fit.grad_norm = grad_norm();
    fit.converged = tiny_step || fit.grad_norm <= scaled_tol(ll);
    return fit;
}

}  // namespace detail

inline double loglik_normal(const CensoredSample& sample, double mu, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("loglik_normal needs sigma > 0");
    return detail::censored_normal_loglik(sample.x, sample.scheme.r, mu, sigma);
}

inline std::pair<double, double> loglik_gradient(const CensoredSample& sample, double mu,
                                                 double sigma) {
    if (!(sigma > 0.0)) throw DomainError("loglik_gradient needs sigma > 0");
    double dmu, dsigma;
    detail::censored_normal_grad(sample.x, sample.scheme.r, mu, sigma, dmu, dsigma);
    return {dmu, dsigma};
}

inline LocationScaleFit fit_normal(const CensoredSample& sample) {
    return detail::fit_censored_normal(sample.x, sample.scheme.r);
}

}  // namespace progof

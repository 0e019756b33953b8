// Temporary smoke checks; deleted before delivery.
#include <cstdio>
#include <cmath>
#include "neutrix/incgamma.hpp"
#include "neutrix/incgamma_star.hpp"
#include "neutrix/polygamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"

using namespace neutrix;

int main() {
    EvalConfig cfg;

    // quadrature basics
    auto e1 = quad::integrate([](double u) { return std::exp(-u); }, 0.0, 1.0);
    std::printf("int exp(-u) 0..1        = %.15g (want %.15g) err_est %.2e work %lld\n",
                e1.value, 1.0 - std::exp(-1.0), e1.abs_err_est, (long long)e1.work);

    auto e2 = quad::integrate([](double u) { return (std::exp(-u) - 1.0) / std::sqrt(u); }, 0.0, 1.0);
    std::printf("int (e^-u - 1)/sqrt(u)  = %.15g (want approx -0.50635)\n", e2.value);

    // singular endpoint u^-0.9
    auto e3 = quad::integrate([](double u) { return std::pow(u, -0.9); }, 0.0, 1.0);
    std::printf("int u^-0.9 0..1         = %.15g (want 10)\n", e3.value);

    // paper fixtures
    std::printf("gamma(0,0.5)  = %.7f (want -1.13699)\n", lower_gamma(0.0, 0.5, cfg).value);
    std::printf("gamma(0,0.75) = %.7f (want -0.917556)\n", lower_gamma(0.0, 0.75, cfg).value);
    std::printf("gamma(0,1)    = %.7f (want -0.7966)\n", lower_gamma(0.0, 1.0, cfg).value);
    std::printf("gamma(1,1)    = %.10f (want %.10f)\n", lower_gamma(1.0, 1.0, cfg).value,
                1.0 - std::exp(-1.0));
    std::printf("gamma(2,1)    = %.10f (want %.10f)\n", lower_gamma(2.0, 1.0, cfg).value,
                1.0 - 2.0 * std::exp(-1.0));
    std::printf("gamma(0.5,1)  = %.10f (want %.10f)\n", lower_gamma(0.5, 1.0, cfg).value,
                std::sqrt(M_PI) * std::erf(1.0));

    // two-path
    for (double a : {-0.5, -1.5, -2.5}) {
        double s = series_generic(a, 1.0, cfg).value;
        double q = regularized_integral(a, 1.0, cfg).value;
        double r = recurrence_shift(a, 1.0, int(std::ceil(-a)), cfg).value;
        std::printf("alpha=%.2f: series %.12g quad %.12g rec %.12g  (d_sq=%.2e d_sr=%.2e)\n",
                    a, s, q, r, std::fabs(s - q), std::fabs(s - r));
    }

    // identity residuals
    for (int m : {1, 2, 3, 6})
        std::printf("identity m=%d x=1: res = %.3e\n", m, neg_int_identity_residual(m, 1.0, cfg));

    // large-x split consistency via identity at x=20
    std::printf("identity m=2 x=20 (split path): res = %.3e\n",
                lower_gamma(-2.0, 20.0, cfg).value + lower_gamma(-1.0, 20.0, cfg).value / 2.0 -
                    (1.0 / (2.0 * 2.0) - std::exp(-20.0) * std::pow(20.0, -2.0) / 2.0));

    // star fixtures
    std::printf("gstar(0,-1/3) = %.7f (want 0.735308)\n",
                gamma_star(0.0, NegativeArgument(-1.0 / 3.0), cfg).value);
    std::printf("gstar(0,-1)   = %.7f (want -1.3179)\n",
                gamma_star(0.0, NegativeArgument(-1.0), cfg).value);
    std::printf("gstar(1,-1)   = %.10f (want %.10f)\n",
                gamma_star(1.0, NegativeArgument(-1.0), cfg).value, 1.0 - std::exp(1.0));
    std::printf("gstar(2,-1)   = %.10f (want -1)\n",
                gamma_star(2.0, NegativeArgument(-1.0), cfg).value);
    std::printf("gstar(-1,-1)  = %.10f (want 0.4003652)\n",
                gamma_star(-1.0, NegativeArgument(-1.0), cfg).value);

    // star two-path
    for (double a : {-0.5, -1.5}) {
        NegativeArgument arg(-1.0);
        double s = star_series_generic(a, arg, cfg).value;
        double q = star_regularized(a, arg, cfg).value;
        std::printf("star alpha=%.2f: series %.12g quad %.12g d=%.2e\n", a, s, q, std::fabs(s - q));
    }
    for (int m : {1, 3}) {
        NegativeArgument arg(-0.5);
        double s = star_series_neg_int(m, arg, cfg).value;
        double q = star_neg_int_regularized(m, arg, cfg).value;
        std::printf("star m=%d: series %.12g quad %.12g d=%.2e\n", m, s, q, std::fabs(s - q));
    }
    {
        NegativeArgument arg(-2.0); // x_minus = 2 > 1, split path
        double s = star_series_neg_int(2, arg, cfg).value;
        double q = star_neg_int_regularized(2, arg, cfg).value;
        std::printf("star m=2 x=-2: series %.12g quad %.12g d=%.2e\n", s, q, std::fabs(s - q));
    }

    // star recurrence
    {
        NegativeArgument arg(-1.0);
        double lhs = star_recurrence(-0.5, arg, cfg).value;
        double rhs = star_series_generic(0.5, arg, cfg).value;
        std::printf("star rec alpha=-0.5: %.12g vs %.12g d=%.2e\n", lhs, rhs, std::fabs(lhs - rhs));
    }

    // star_deriv vs finite difference at alpha=-0.5
    {
        NegativeArgument arg(-1.0);
        double h = 1e-5;
        double fd = (gamma_star(-0.5 + h, arg, cfg).value - gamma_star(-0.5 - h, arg, cfg).value) / (2 * h);
        double an = star_deriv(-0.5, arg, 1, cfg).value;
        std::printf("star_deriv(-0.5,r1): %.10g vs fd %.10g d=%.2e\n", an, fd, std::fabs(an - fd));
    }

    // polygamma
    std::printf("zeta(2) = %.15g (want %.15g)\n", zeta_int(2), M_PI * M_PI / 6.0);
    std::printf("zeta(4) = %.15g (want %.15g)\n", zeta_int(4), std::pow(M_PI, 4) / 90.0);
    std::printf("zeta(20) = %.15g (want 1.0000009539...)\n", zeta_int(20));
    std::printf("psi(1) = %.12f (want %.12f)\n", polygamma_positive(0, 1.0).value, -euler_gamma());
    std::printf("psi'(1) = %.12f (want %.12f)\n", polygamma_positive(1, 1.0).value, M_PI * M_PI / 6.0);
    std::printf("psi''(1) = %.12f (want %.12f)\n", polygamma_positive(2, 1.0).value, -2 * zeta_int(3));
    std::printf("psi'(0.5) = %.12f (want %.12f)\n", polygamma_positive(1, 0.5).value, M_PI * M_PI / 2.0);
    std::printf("psi^1(-0.5) = %.10f (want %.10f)\n", polygamma_any(1, -0.5, cfg).value,
                M_PI * M_PI / 2.0 - 4.0);
    std::printf("psi(-2) = %.10f (want 0.9227843)\n", polygamma_any(0, -2.0, cfg).value);
    std::printf("psi_int(1,1): %.10g vs th34 %.10g\n",
                polygamma_neutrix_integral(1, 1.0, cfg).value, zeta_int(2));
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            std::printf("th34 n=%d m=%d: closed %.10g route %.10g d=%.2e\n", n, m,
                        polygamma_neg_int(n, m), polygamma_neutrix_integral(n, -double(m), cfg).value,
                        std::fabs(polygamma_neg_int(n, m) -
                                  polygamma_neutrix_integral(n, -double(m), cfg).value));
    std::printf("psi_int(0,-0.5) = %.10g (want %.10g)\n",
                polygamma_neutrix_integral(0, -0.5, cfg).value,
                -euler_gamma() - 2.0 * std::log(2.0) + 2.0);

    // neutrix fit basics
    {
        auto F = [](double e) { return 3.0 + std::log(e); };
        auto fit1 = fit::extract_finite_part(F, {{0.0, 1}}, fit::default_grid(1));
        std::printf("fit 3+ln(eps): %.15g (want 3)\n", fit1.finite_part);
        auto F2 = [](double e) { return 5.0 + std::sqrt(e); };
        auto fit2 = fit::extract_finite_part(F2, {}, fit::EpsilonGrid{0.2, 0.5, 12});
        std::printf("wynn 5+sqrt(eps): %.15g (want 5)\n", fit2.finite_part);
    }

    // Lemma 3.2 via fit
    {
        quad::QuadratureConfig tight{1e-16, 1e-12, 4000};
        for (int m : {1, 3, 5}) {
            for (int n : {1, 3, 5}) {
                auto F = [&](double eps) {
                    return quad::integrate(
                               [m, n](double t) {
                                   return std::pow(t, -double(m) - 1.0) *
                                          neutrix::detail::ipow(std::log(t), n);
                               },
                               eps, 1.0, tight)
                        .value;
                };
                auto basis = fit::basis_for_integrand({-double(m)}, n);
                fit::EpsilonGrid grid{0.25, 0.6, int(basis.size()) + 8};
                try {
                    auto f = fit::extract_finite_part(F, basis, grid);
                    std::printf("lemma32 m=%d n=%d: fit %.10g closed %.10g d=%.2e cond=%.1e\n", m, n,
                                f.finite_part, quad::log_moment_finite_part(m, n),
                                std::fabs(f.finite_part - quad::log_moment_finite_part(m, n)),
                                f.condition_estimate);
                } catch (const std::exception& ex) {
                    std::printf("lemma32 m=%d n=%d: EXC %s\n", m, n, ex.what());
                }
            }
        }
    }

    // gamma(-2,1) via fit with Taylor helper columns
    {
        quad::QuadratureConfig tight{1e-16, 1e-12, 4000};
        auto F = [&](double eps) {
            return quad::integrate([](double u) { return std::pow(u, -3.0) * std::exp(-u); }, eps,
                                   1.0, tight)
                .value;
        };
        auto basis = fit::basis_for_integrand({-2.0, -1.0}, 0);
        for (int helpers : {0, 3, 6}) {
            try {
                auto f = fit::extract_finite_part(F, basis, fit::EpsilonGrid{0.25, 0.6, 20}, helpers);
                std::printf("gamma(-2,1) fit (helpers=%d): %.10g closed %.10g d=%.2e cond %.1e rms %.1e\n",
                            helpers, f.finite_part, series_neg_int(2, 1.0, cfg).value,
                            std::fabs(f.finite_part - series_neg_int(2, 1.0, cfg).value),
                            f.condition_estimate, f.residual_rms);
            } catch (const std::exception& ex) {
                std::printf("gamma(-2,1) fit (helpers=%d): EXC %s\n", helpers, ex.what());
            }
        }
    }

    // deriv series vs fd
    {
        double h = 1e-5;
        double fd = (series_generic(0.5 + h, 1.0, cfg).value - series_generic(0.5 - h, 1.0, cfg).value) / (2 * h);
        std::printf("gamma_deriv(0.5,1): %.10g vs fd %.10g\n",
                    deriv_series_generic(0.5, 1.0, 1, cfg).value, fd);
        auto q = quad::integrate([](double u) { return std::log(u) * std::exp(-u); }, 0.0, 1.0);
        std::printf("gamma_deriv(1,1):   %.10g vs quad %.10g\n",
                    deriv_series_generic(1.0, 1.0, 1, cfg).value, q.value);
    }

    // pole residue
    for (int m : {1, 2, 3}) {
        double lim = (m % 2 ? -1.0 : 1.0) / neutrix::detail::factorial(m);
        double v = (-(double)m + 1e-6 + m) * series_generic(-(double)m + 1e-6, 1.0, cfg).value;
        std::printf("pole m=%d: %.8g (want %.8g) d=%.2e\n", m, v, lim, std::fabs(v - lim));
    }
    return 0;
}

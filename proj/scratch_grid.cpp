// Grid tuning experiments; deleted before delivery.
#include <cstdio>
#include <cmath>
#include "neutrix/incgamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
#include "neutrix/incgamma_star.hpp"
#include "neutrix/polygamma.hpp"

using namespace neutrix;

int main() {
    quad::QuadratureConfig tight{1e-16, 1e-12, 4000};

    std::printf("=== lemma32 1..5 grids (centered + weighted) ===\n");
    for (auto grid : {fit::EpsilonGrid{0.40, 0.35, 0}, fit::EpsilonGrid{0.45, 0.40, 0},
                      fit::EpsilonGrid{0.45, 0.30, 0}, fit::EpsilonGrid{0.35, 0.25, 0}}) {
        for (int extra : {6, 8}) {
            double worst = 0.0, worstcond = 0.0;
            int wm = 0, wn = 0, nexc = 0;
            for (int m = 1; m <= 5; ++m) {
                for (int n = 1; n <= 5; ++n) {
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
                    fit::EpsilonGrid g = grid;
                    g.count = int(basis.size()) + extra;
                    try {
                        auto f = fit::extract_finite_part(F, basis, g);
                        double d = std::fabs(f.finite_part - quad::log_moment_finite_part(m, n));
                        if (d > worst) { worst = d; wm = m; wn = n; }
                        worstcond = std::max(worstcond, f.condition_estimate);
                    } catch (const std::exception&) {
                        ++nexc;
                        std::printf("  EXC at (%d,%d)\n", m, n);
                    }
                }
            }
            std::printf("eps0=%.2f ratio=%.2f +%d: worst d=%.3e at (%d,%d), maxcond=%.1e, exc=%d\n",
                        grid.eps0, grid.ratio, extra, worst, wm, wn, worstcond, nexc);
        }
    }

    std::printf("=== stability + superset on chosen grid ===\n");
    {
        double worst_stab = 0.0, worst_super = 0.0;
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
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
                fit::EpsilonGrid g1{0.45, 0.40, int(basis.size()) + 8};
                fit::EpsilonGrid g2{0.225, 0.40, int(basis.size()) + 8};
                double c1 = fit::extract_finite_part(F, basis, g1).finite_part;
                double c2 = fit::extract_finite_part(F, basis, g2).finite_part;
                worst_stab = std::max(worst_stab, std::fabs(c1 - c2));
                auto basis2 = basis;
                basis2.push_back({-3.0 - m, 0}); // spurious steeper term
                fit::EpsilonGrid g3{0.45, 0.40, int(basis2.size()) + 8};
                try {
                    double c3 = fit::extract_finite_part(F, basis2, g3).finite_part;
                    worst_super = std::max(worst_super, std::fabs(c3 - c1));
                } catch (const IllConditioned&) {
                }
            }
        std::printf("stability worst=%.3e superset worst=%.3e\n", worst_stab, worst_super);
    }

    std::printf("=== exp-type cases on (0.3,0.7,h=4) ===\n");
    EvalConfig cfg;
    {
        auto F = [&](double eps) {
            return quad::integrate([](double u) { return std::pow(u, -3.0) * std::exp(-u); }, eps,
                                   1.0, tight)
                .value;
        };
        auto basis = fit::basis_for_integrand({-2.0, -1.0}, 0);
        auto f = fit::extract_finite_part(F, basis, fit::EpsilonGrid{0.3, 0.7, int(basis.size()) + 16}, 4);
        std::printf("gamma(-2,1): d=%.2e cond=%.1e\n",
                    std::fabs(f.finite_part - series_neg_int(2, 1.0, cfg).value),
                    f.condition_estimate);
    }
    {
        auto F = [&](double eps) {
            return quad::integrate([](double u) { return std::exp(-u) / u; }, eps, 1.0, tight).value;
        };
        auto f = fit::extract_finite_part(F, {{0.0, 1}}, fit::EpsilonGrid{0.3, 0.7, 17}, 4);
        std::printf("gamma(0,1): fit=%.8f d=%.2e cond=%.1e\n", f.finite_part,
                    std::fabs(f.finite_part - series_zero(1.0, cfg).value), f.condition_estimate);
    }
    {
        // deriv m2 r2 x=0.5 (hardest deriv case, tol 1e-4)
        auto F = [&](double eps) {
            return quad::integrate(
                       [](double u) {
                           const double l = std::log(u);
                           return std::pow(u, -3.0) * l * l * std::exp(-u);
                       },
                       eps, 0.5, tight)
                .value;
        };
        auto basis = fit::basis_for_integrand({-2.0, -1.0}, 2);
        auto f = fit::extract_finite_part(F, basis,
                                          fit::EpsilonGrid{0.3, 0.7, int(basis.size()) + 3 * 4 + 8}, 4);
        std::printf("deriv m2r2: d=%.2e cond=%.1e\n",
                    std::fabs(f.finite_part - deriv_series_neg_int(2, 0.5, 2, cfg).value),
                    f.condition_estimate);
    }
    {
        // star deriv m2 r2 x=-1
        auto F = [&](double eps) {
            return -quad::integrate(
                        [](double v) {
                            const double l = std::log(v);
                            return std::pow(v, -3.0) * l * l * std::exp(v);
                        },
                        eps, 1.0, tight)
                        .value;
        };
        auto basis = fit::basis_for_integrand({-2.0, -1.0}, 2);
        auto f = fit::extract_finite_part(F, basis,
                                          fit::EpsilonGrid{0.3, 0.7, int(basis.size()) + 3 * 4 + 8}, 4);
        std::printf("star deriv m2r2: d=%.2e cond=%.1e\n",
                    std::fabs(f.finite_part - star_deriv(-2.0, NegativeArgument(-1.0), 2, cfg).value),
                    f.condition_estimate);
    }
    {
        // psi^(1)(-1) via fit (tol 1e-5): F = int t^-2 ln t/(1-t)
        auto F = [&](double eps) {
            return -quad::integrate(
                        [](double t) { return std::log(t) / (std::pow(t, 2.0) * (1.0 - t)); }, eps,
                        1.0, tight)
                        .value;
        };
        auto basis = fit::basis_for_integrand({-1.0}, 1);
        auto f = fit::extract_finite_part(F, basis,
                                          fit::EpsilonGrid{0.3, 0.7, int(basis.size()) + 2 * 4 + 8}, 4);
        std::printf("psi1(-1): fit=%.8f want=%.8f d=%.2e cond=%.1e\n", f.finite_part,
                    polygamma_neg_int(1, 1), std::fabs(f.finite_part - polygamma_neg_int(1, 1)),
                    f.condition_estimate);
    }
    {
        // eq33 psi(-m) exact-model fits
        for (int m = 0; m <= 4; ++m) {
            auto F = [&, m](double eps) {
                return quad::integrate(
                           [m](double t) {
                               return -std::expm1(-double(m + 1) * std::log(t)) / (1.0 - t);
                           },
                           eps, 1.0, tight)
                    .value;
            };
            std::vector<double> powers;
            for (int j = 1; j <= m; ++j) powers.push_back(-double(j));
            auto basis = fit::basis_for_integrand(powers, 0);
            auto f = fit::extract_finite_part(F, basis,
                                              fit::EpsilonGrid{0.3, 0.5, int(basis.size()) + 10});
            std::printf("eq33 m=%d: d=%.2e cond=%.1e\n", m,
                        std::fabs(-euler_gamma() + f.finite_part - psi_neg_int(m)),
                        f.condition_estimate);
        }
    }
    {
        // exactness: synthetic exact combination
        auto F = [](double e) {
            return 4.0 + 2.0 / e - 3.0 * std::log(e) / e + 0.7 * std::log(e);
        };
        std::vector<fit::NegligibleTerm> basis = {{-1.0, 0}, {-1.0, 1}, {0.0, 1}};
        auto f = fit::extract_finite_part(F, basis, fit::default_grid(basis.size()));
        std::printf("synthetic: d=%.2e coeffs: %.12g %.12g %.12g\n", std::fabs(f.finite_part - 4.0),
                    f.coefficients[0].second, f.coefficients[1].second, f.coefficients[2].second);
    }
    return 0;
}

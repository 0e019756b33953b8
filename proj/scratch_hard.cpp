// Hard-case config search; deleted before delivery.
#include <cstdio>
#include <cmath>
#include <vector>
#include "neutrix/incgamma.hpp"
#include "neutrix/polygamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
static quad::QuadratureConfig tight{1e-18, 5e-14, 6000};

int main() {
    EvalConfig cfg;
    // eq8_m1_r1: F = int_eps^1 u^-2 ln u e^-u, basis bfi({-1},1), taylor ladder (1..h, logs 0..1)
    {
        auto F = [&](double eps) {
            return quad::integrate(
                       [](double u) { return std::pow(u, -2.0) * std::log(u) * std::exp(-u); },
                       eps, 1.0, tight)
                .value;
        };
        auto basis = fit::basis_for_integrand({-1.0}, 1);
        double closed = deriv_series_neg_int(1, 1.0, 1, cfg).value;
        for (double eps0 : {0.3, 0.2}) {
            for (double ratio : {0.55, 0.7}) {
                for (int h : {2, 3, 4}) {
                    auto tl = fit::taylor_ladder(1.0, h, 1);
                    fit::EpsilonGrid g{eps0, ratio, int(basis.size() + tl.size()) + 8};
                    try {
                        auto f = fit::extract_finite_part(F, basis, g, tl);
                        std::printf("eq8m1r1 e0=%.2f r=%.2f h=%d: d=%.2e cond=%.1e\n", eps0, ratio,
                                    h, std::fabs(f.finite_part - closed), f.condition_estimate);
                    } catch (const std::exception&) {
                        std::printf("eq8m1r1 e0=%.2f r=%.2f h=%d: EXC\n", eps0, ratio, h);
                    }
                }
            }
        }
    }
    // eq29_n2_m2: F = -int t^-3 ln^2 t/(1-t), basis bfi({-1,-2},2), taylor (1..h, logs 0..2)
    {
        auto F = [&](double eps) {
            return -quad::integrate(
                        [](double t) {
                            const double l = std::log(t);
                            return std::pow(t, -3.0) * l * l / (1.0 - t);
                        },
                        eps, 1.0, tight)
                        .value;
        };
        auto basis = fit::basis_for_integrand({-1.0, -2.0}, 2);
        double closed = polygamma_neg_int(2, 2);
        for (double eps0 : {0.3, 0.2}) {
            for (double ratio : {0.55, 0.7}) {
                for (int h : {2, 3, 4}) {
                    auto tl = fit::taylor_ladder(1.0, h, 2);
                    fit::EpsilonGrid g{eps0, ratio, int(basis.size() + tl.size()) + 8};
                    try {
                        auto f = fit::extract_finite_part(F, basis, g, tl);
                        std::printf("eq29n2m2 e0=%.2f r=%.2f h=%d: d=%.2e cond=%.1e\n", eps0,
                                    ratio, h, std::fabs(f.finite_part - closed),
                                    f.condition_estimate);
                    } catch (const std::exception&) {
                        std::printf("eq29n2m2 e0=%.2f r=%.2f h=%d: EXC\n", eps0, ratio, h);
                    }
                }
            }
        }
    }
    // eq8 generic alpha=-0.5 r=2: fractional ladder 0.5..  logs 0..2
    {
        auto F = [&](double eps) {
            return quad::integrate(
                       [](double u) {
                           const double l = std::log(u);
                           return std::pow(u, -1.5) * l * l * std::exp(-u);
                       },
                       eps, 1.0, tight)
                .value;
        };
        auto basis = fit::basis_for_integrand({-0.5}, 2);
        double closed = deriv_series_generic(-0.5, 1.0, 2, cfg).value;
        for (double eps0 : {0.3, 0.2}) {
            for (double ratio : {0.55, 0.7}) {
                for (int h : {2, 3, 4}) {
                    auto tl = fit::taylor_ladder(0.5, h, 2);
                    fit::EpsilonGrid g{eps0, ratio, int(basis.size() + tl.size()) + 8};
                    try {
                        auto f = fit::extract_finite_part(F, basis, g, tl);
                        std::printf("eq8a-.5r2 e0=%.2f r=%.2f h=%d: d=%.2e cond=%.1e\n", eps0,
                                    ratio, h, std::fabs(f.finite_part - closed),
                                    f.condition_estimate);
                    } catch (const std::exception&) {
                        std::printf("eq8a-.5r2 e0=%.2f r=%.2f h=%d: EXC\n", eps0, ratio, h);
                    }
                }
            }
        }
    }
    return 0;
}

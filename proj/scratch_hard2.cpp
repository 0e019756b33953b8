// Minimal-true-basis r=2 experiments; deleted before delivery.
#include <cstdio>
#include <cmath>
#include <vector>
#include "neutrix/incgamma.hpp"
#include "neutrix/incgamma_star.hpp"
#include "neutrix/polygamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
static quad::QuadratureConfig tight{1e-18, 5e-14, 6000};

// true negligible content of int_eps v^{-m-1} ln^r v (exp-series) type
static std::vector<fit::NegligibleTerm> true_basis(int m, int r) {
    std::vector<fit::NegligibleTerm> b;
    for (int j = 1; j <= m; ++j)
        for (int q = 0; q <= r; ++q) b.push_back({-double(j), q});
    b.push_back({0.0, r + 1});
    return b;
}

int main() {
    EvalConfig cfg;
    // eq8 generic alpha=-0.5 r=2: minimal fractional basis
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
        std::vector<fit::NegligibleTerm> basis = {{-0.5, 0}, {-0.5, 1}, {-0.5, 2}};
        double closed = deriv_series_generic(-0.5, 1.0, 2, cfg).value;
        for (double eps0 : {0.3, 0.2})
            for (int h : {3, 4, 5}) {
                auto tl = fit::taylor_ladder(0.5, h, 2);
                fit::EpsilonGrid g{eps0, 0.6, int(basis.size() + tl.size()) + 10};
                try {
                    auto f = fit::extract_finite_part(F, basis, g, tl);
                    std::printf("eq8a-.5r2min e0=%.2f h=%d: d=%.2e cond=%.1e\n", eps0, h,
                                std::fabs(f.finite_part - closed), f.condition_estimate);
                } catch (const std::exception&) {
                    std::printf("eq8a-.5r2min e0=%.2f h=%d: EXC\n", eps0, h);
                }
            }
    }
    // star deriv (r,m)=(2,2) x=-1 and x=-0.5: minimal basis
    for (double x : {-1.0, -0.5}) {
        auto F = [&, x](double eps) {
            return -quad::integrate(
                        [](double v) {
                            const double l = std::log(v);
                            return std::pow(v, -3.0) * l * l * std::exp(v);
                        },
                        eps, -x, tight)
                        .value;
        };
        double closed = star_deriv(-2.0, NegativeArgument(x), 2, cfg).value;
        auto basis = true_basis(2, 2);
        for (double eps0 : {0.3, 0.2})
            for (int h : {3, 4}) {
                auto tl = fit::taylor_ladder(1.0, h, 2);
                fit::EpsilonGrid g{eps0, 0.6, int(basis.size() + tl.size()) + 10};
                try {
                    auto f = fit::extract_finite_part(F, basis, g, tl);
                    std::printf("star m2r2 x=%.1f e0=%.2f h=%d: d=%.2e cond=%.1e\n", x, eps0, h,
                                std::fabs(f.finite_part - closed), f.condition_estimate);
                } catch (const std::exception&) {
                    std::printf("star m2r2 x=%.1f e0=%.2f h=%d: EXC\n", x, eps0, h);
                }
            }
    }
    // deriv_series_neg_int (2, 0.5, 2), tol 1e-4
    {
        auto F = [&](double eps) {
            return quad::integrate(
                       [](double u) {
                           const double l = std::log(u);
                           return std::pow(u, -3.0) * l * l * std::exp(-u);
                       },
                       eps, 0.5, tight)
                .value;
        };
        double closed = deriv_series_neg_int(2, 0.5, 2, cfg).value;
        auto basis = true_basis(2, 2);
        for (double eps0 : {0.3, 0.2})
            for (int h : {3, 4}) {
                auto tl = fit::taylor_ladder(1.0, h, 2);
                fit::EpsilonGrid g{eps0, 0.6, int(basis.size() + tl.size()) + 10};
                try {
                    auto f = fit::extract_finite_part(F, basis, g, tl);
                    std::printf("deriv m2r2 e0=%.2f h=%d: d=%.2e cond=%.1e\n", eps0, h,
                                std::fabs(f.finite_part - closed), f.condition_estimate);
                } catch (const std::exception&) {
                    std::printf("deriv m2r2 e0=%.2f h=%d: EXC\n", eps0, h);
                }
            }
    }
    // eq29 n=1 m=1 (spec example) minimal-ish basis incl. genuine pure logs
    {
        auto F = [&](double eps) {
            return -quad::integrate(
                        [](double t) { return std::log(t) / (t * t * (1.0 - t)); }, eps, 1.0,
                        tight)
                        .value;
        };
        auto basis = true_basis(1, 1);
        for (double eps0 : {0.3, 0.2})
            for (int h : {3, 4}) {
                auto tl = fit::taylor_ladder(1.0, h, 1);
                fit::EpsilonGrid g{eps0, 0.6, int(basis.size() + tl.size()) + 10};
                try {
                    auto f = fit::extract_finite_part(F, basis, g, tl);
                    std::printf("eq29n1m1 e0=%.2f h=%d: d=%.2e cond=%.1e\n", eps0, h,
                                std::fabs(f.finite_part - polygamma_neg_int(1, 1)),
                                f.condition_estimate);
                } catch (const std::exception&) {
                    std::printf("eq29n1m1 e0=%.2f h=%d: EXC\n", eps0, h);
                }
            }
    }
    return 0;
}

#include <cstdio>
#include <cmath>
#include <vector>
#include "neutrix/incgamma.hpp"
#include "neutrix/incgamma_star.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
static quad::QuadratureConfig tight{1e-18, 5e-14, 6000};
static std::vector<fit::NegligibleTerm> true_basis(int m, int r) {
    std::vector<fit::NegligibleTerm> b;
    for (int j = 1; j <= m; ++j)
        for (int q = 0; q <= r; ++q) b.push_back({-double(j), q});
    b.push_back({0.0, r + 1});
    return b;
}
int main() {
    EvalConfig cfg;
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
        for (double eps0 : {0.02, 0.05, 0.1})
            for (int count : {20, 28})
                for (int h : {0, 1}) {
                    auto tl = fit::taylor_ladder(1.0, h, 2);
                    fit::EpsilonGrid g{eps0, 0.55, count};
                    try {
                        auto f = fit::extract_finite_part(F, basis, g, tl);
                        std::printf("star x=%.1f e0=%.2f c=%d h=%d: d=%.2e cond=%.1e\n", x, eps0,
                                    count, h, std::fabs(f.finite_part - closed),
                                    f.condition_estimate);
                    } catch (const std::exception& ex) {
                        std::printf("star x=%.1f e0=%.2f c=%d h=%d: EXC %s\n", x, eps0, count, h, ex.what());
                    }
                }
    }
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
        for (double eps0 : {0.02, 0.05, 0.1})
            for (int count : {20, 28})
                for (int h : {0, 1}) {
                    auto tl = fit::taylor_ladder(1.0, h, 2);
                    fit::EpsilonGrid g{eps0, 0.55, count};
                    try {
                        auto f = fit::extract_finite_part(F, basis, g, tl);
                        std::printf("deriv e0=%.2f c=%d h=%d: d=%.2e cond=%.1e\n", eps0, count, h,
                                    std::fabs(f.finite_part - closed), f.condition_estimate);
                    } catch (const std::exception& ex) {
                        std::printf("deriv e0=%.2f c=%d h=%d: EXC %s\n", eps0, count, h, ex.what());
                    }
                }
    }
    return 0;
}

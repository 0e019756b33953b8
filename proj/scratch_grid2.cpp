// Graded-grid experiments; deleted before delivery.
#include <cstdio>
#include <cmath>
#include "neutrix/incgamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"

using namespace neutrix;

// eps_min with eps^-m |ln eps|^L ~ cap (m >= 1); fixed depth for m == 0.
static double depth_for(int m, int L, double cap) {
    if (m == 0) return 1e-8;
    double e = std::pow(1.0 / cap, 1.0 / m);
    for (int it = 0; it < 20; ++it)
        e = std::pow(neutrix::detail::ipow(std::fabs(std::log(e)), L) / cap, 1.0 / m);
    return std::min(e, 0.2);
}

static fit::EpsilonGrid graded(double eps0, double eps_min, int count) {
    return {eps0, std::pow(eps_min / eps0, 1.0 / double(count - 1)), count};
}

int main() {
    quad::QuadratureConfig tight{1e-16, 1e-12, 4000};

    for (double cap : {1e4, 1e6, 1e8}) {
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
                auto g = graded(0.45, depth_for(m, n, cap), int(basis.size()) + 8);
                try {
                    auto f = fit::extract_finite_part(F, basis, g);
                    double d = std::fabs(f.finite_part - quad::log_moment_finite_part(m, n));
                    if (d > worst) { worst = d; wm = m; wn = n; }
                    worstcond = std::max(worstcond, f.condition_estimate);
                } catch (const std::exception&) {
                    std::printf("  EXC (%d,%d) eps_min=%.2e\n", m, n, depth_for(m, n, cap));
                    ++nexc;
                }
            }
        }
        std::printf("cap=%.0e: worst d=%.3e at (%d,%d), maxcond=%.1e, exc=%d\n", cap, worst, wm,
                    wn, worstcond, nexc);
        std::fflush(stdout);
    }
    return 0;
}

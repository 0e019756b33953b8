// Minimal-basis lemma32 sweep; deleted before delivery.
#include <cstdio>
#include <cmath>
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
static double depth_for(int m, int L, double cap) {
    double e = std::pow(1.0 / cap, 1.0 / m);
    for (int it = 0; it < 20; ++it)
        e = std::pow(neutrix::detail::ipow(std::fabs(std::log(e)), L) / cap, 1.0 / m);
    return std::min(e, 0.2);
}
int main() {
    quad::QuadratureConfig tight{1e-18, 5e-14, 6000};
    double worst = 0, worstcond = 0;
    int wm = 0, wn = 0, nexc = 0;
    for (int m = 1; m <= 5; ++m)
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
            std::vector<fit::NegligibleTerm> basis;
            for (int r = 0; r <= n; ++r) basis.push_back({-double(m), r});
            const int count = int(basis.size()) + 10;
            const double emin = depth_for(m, n, 1e8);
            fit::EpsilonGrid g{0.45, std::pow(emin / 0.45, 1.0 / (count - 1)), count};
            try {
                auto f = fit::extract_finite_part(F, basis, g);
                double d = std::fabs(f.finite_part - quad::log_moment_finite_part(m, n));
                if (d > worst) { worst = d; wm = m; wn = n; }
                worstcond = std::max(worstcond, f.condition_estimate);
            } catch (const std::exception&) {
                std::printf("EXC (%d,%d)\n", m, n);
                ++nexc;
            }
        }
    std::printf("minimal basis: worst d=%.3e at (%d,%d), maxcond=%.1e, exc=%d\n", worst, wm, wn,
                worstcond, nexc);
    return 0;
}

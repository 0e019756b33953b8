// (1,5) case sweep; deleted before delivery.
#include <cstdio>
#include <cmath>
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
int main() {
    quad::QuadratureConfig tight{1e-18, 5e-14, 6000};
    const int m = 1, n = 5;
    auto F = [&](double eps) {
        return quad::integrate(
                   [](double t) {
                       return std::pow(t, -2.0) * neutrix::detail::ipow(std::log(t), 5);
                   },
                   eps, 1.0, tight)
            .value;
    };
    auto basis = fit::basis_for_integrand({-1.0}, n);
    for (double emin : {3e-3, 3e-4, 3e-5}) {
        for (int count : {40, 56, 72}) {
            fit::EpsilonGrid g{0.45, std::pow(emin / 0.45, 1.0 / (count - 1)), count};
            try {
                auto f = fit::extract_finite_part(F, basis, g);
                std::printf("emin=%.0e count=%d: d=%.2e cond=%.1e\n", emin, count,
                            std::fabs(f.finite_part - quad::log_moment_finite_part(m, n)),
                            f.condition_estimate);
            } catch (const std::exception& e) {
                std::printf("emin=%.0e count=%d: EXC\n", emin, count);
            }
        }
    }
    return 0;
}

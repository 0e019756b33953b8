#include <cstdio>
#include <cmath>
#include <vector>
#include "neutrix/polygamma.hpp"
#include "neutrix/neutrix_fit.hpp"
#include "neutrix/quadrature.hpp"
using namespace neutrix;
int main() {
    quad::QuadratureConfig tight{1e-18, 5e-14, 6000};
    auto F = [&](double eps) {
        return -quad::integrate([](double t) { return std::log(t) / (t * t * (1.0 - t)); }, eps,
                                1.0, tight)
                    .value;
    };
    // expected F(eps) ~ (1 + zeta2) - eps^-1 ln eps - eps^-1 + ln^2(eps)/2 + O(eps ln)
    for (double e : {0.3, 0.1, 0.03, 0.01}) {
        double model = (1 + zeta_int(2)) - std::log(e) / e - 1.0 / e + 0.5 * std::log(e) * std::log(e);
        std::printf("F(%g) = %.10f   model %.10f   F-model %.3e\n", e, F(e), model, F(e) - model);
    }
    std::vector<fit::NegligibleTerm> basis = {{-1.0, 0}, {-1.0, 1}, {0.0, 2}};
    auto tl = fit::taylor_ladder(1.0, 3, 1);
    fit::EpsilonGrid g{0.3, 0.6, int(basis.size() + tl.size()) + 10};
    auto f = fit::extract_finite_part(F, basis, g, tl);
    std::printf("fit = %.10f (want %.10f) rms=%.2e\n", f.finite_part, polygamma_neg_int(1, 1),
                f.residual_rms);
    for (auto& [t, c] : f.coefficients)
        std::printf("  coeff(%g,%d) = %.8f\n", t.lambda, t.log_power, c);
    return 0;
}

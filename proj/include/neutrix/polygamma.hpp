#pragma once

#include <cmath>
#include <map>

#include "neutrix/evaluation.hpp"
#include "neutrix/incgamma.hpp"
#include "neutrix/quadrature.hpp"

namespace neutrix {

namespace detail {

// zeta(s) via the alternating (eta) series with Cohen-Rodriguez Villegas-
// Zagier Chebyshev-weight acceleration; spectral convergence, no tables.
inline double zeta_cvz(int s) {
    constexpr int n = 32;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, acc = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::pow(double(k + 1), -double(s));
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    const double eta = acc / d;
    return eta / (1.0 - std::pow(2.0, 1.0 - double(s)));
}

} // namespace detail

// Shared constants: Euler-Mascheroni gamma and a zeta table, built once and
// immutable afterwards (concurrent readers always see consistent values).
struct MathConstants {
    double euler_gamma = 0.57721566490153286061;
    std::map<int, double> zeta_cache;

    static const MathConstants& instance() {
        static const MathConstants c = [] {
            MathConstants m;
            for (int s = 2; s <= 64; ++s) m.zeta_cache.emplace(s, detail::zeta_cvz(s));
            return m;
        }();
        return c;
    }
};

inline double euler_gamma() { return MathConstants::instance().euler_gamma; }

// zeta(s) for integer s >= 2, to full double accuracy.
inline double zeta_int(int s) {
    if (s < 2) throw DomainError("zeta_int: s must be >= 2");
    const auto& cache = MathConstants::instance().zeta_cache;
    const auto it = cache.find(s);
    return it != cache.end() ? it->second : detail::zeta_cvz(s);
}

// phi(m) = sum_{i=1}^m 1/i.
inline double harmonic(int m) {
    if (m < 0) throw DomainError("harmonic: m must be >= 0");
    detail::CompensatedSum s;
    for (int i = 1; i <= m; ++i) s.add(1.0 / double(i));
    return s.value();
}

// psi(-m) = -euler_gamma + phi(m).
inline double psi_neg_int(int m) {
    if (m < 0) throw DomainError("psi_neg_int: m must be >= 0");
    return -euler_gamma() + harmonic(m);
}

// psi^(n)(-m) = sum_{i=1}^m n!/i^{n+1} + (-1)^{n+1} n! zeta(n+1), n >= 1.
inline double polygamma_neg_int(int n, int m) {
    if (n < 1) throw DomainError("polygamma_neg_int: n must be >= 1");
    if (m < 0) throw DomainError("polygamma_neg_int: m must be >= 0");
    const double nf = detail::factorial(n);
    detail::CompensatedSum s;
    for (int i = 1; i <= m; ++i) s.add(nf / detail::ipow(double(i), n + 1));
    s.add((n % 2 == 0 ? -1.0 : 1.0) * nf * zeta_int(n + 1));
    return s.value();
}

namespace detail {

// B_2, B_4, ..., B_20.
inline constexpr double kBernoulli[10] = {
    1.0 / 6.0,   -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0,  43867.0 / 798.0,  -174611.0 / 330.0,
};

} // namespace detail

// psi^(n)(x) for x > 0: shift x upward by the recurrence until x >= 12,
// then close the j-series with the Euler-Maclaurin (asymptotic) tail.
inline Evaluation polygamma_positive(int n, double x) {
    if (n < 0) throw DomainError("polygamma_positive: n must be >= 0");
    if (n > 160) throw DomainError("polygamma_positive: n too large");
    if (!(x > 0.0)) throw DomainError("polygamma_positive: x must be positive");

    constexpr double kShiftTo = 12.0;
    const int K = x < kShiftTo ? int(std::ceil(kShiftTo - x)) : 0;
    const double y = x + K;
    const double nf = detail::factorial(n);

    detail::CompensatedSum asym;
    double last = 0.0;
    if (n == 0) {
        asym.add(std::log(y));
        asym.add(-0.5 / y);
        double y2k = 1.0;
        for (int k = 1; k <= 10; ++k) {
            y2k *= y * y;
            last = detail::kBernoulli[k - 1] / (2.0 * k * y2k);
            asym.add(-last);
        }
    } else {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^{n+1}
        asym.add(sign * (nf / double(n)) / std::pow(y, double(n)));
        asym.add(sign * 0.5 * nf / std::pow(y, double(n + 1)));
        for (int k = 1; k <= 10; ++k) {
            double c = 1.0; // (2k+n-1)!/(2k)!
            for (int i = 2 * k + 1; i <= 2 * k + n - 1; ++i) c *= double(i);
            last = detail::kBernoulli[k - 1] * c / std::pow(y, double(2 * k + n));
            asym.add(sign * last);
        }
    }
    const double v_asym = asym.value();
    if (!(std::abs(last) <= 1e-10 * std::abs(v_asym) + 1e-300))
        throw ConvergenceFailure("polygamma_positive: asymptotic tail bound unmet");

    detail::CompensatedSum shift; // sum_{k<K} (x+k)^{-n-1}
    for (int k = 0; k < K; ++k) shift.add(std::pow(x + k, -double(n + 1)));
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    const double value = v_asym - sign_n * nf * shift.value();
    return {value, std::abs(last) + 4e-16 * (std::abs(v_asym) + nf * shift.abs()),
            Method::series, K + 10};
}

// psi^(n)(x) for all real x: positive arguments directly, negative
// non-integers through the reflection-free recurrence
//   psi^(n)(x) = psi^(n)(x+m) - (-1)^n n! sum_{k<m} (x+k)^{-n-1},
// and nonpositive integers by their neutrix values.
inline Evaluation polygamma_any(int n, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (n < 0) throw DomainError("polygamma_any: n must be >= 0");
    if (!std::isfinite(x)) throw DomainError("polygamma_any: x must be finite");

    const double nearest = std::round(x);
    if (nearest <= 0.0 && std::abs(x - nearest) <= cfg.integer_tol) {
        const int m = int(-nearest);
        const double v = (n == 0) ? psi_neg_int(m) : polygamma_neg_int(n, m);
        return {v, 4e-16 * std::abs(v), Method::closed_form, m + 1};
    }
    if (x > 0.0) return polygamma_positive(n, x);

    const int m = int(std::floor(-x)) + 1; // -m < x < -m+1
    const Evaluation base = polygamma_positive(n, x + m);
    detail::CompensatedSum s;
    for (int k = 0; k < m; ++k) s.add(std::pow(x + k, -double(n + 1)));
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    const double nf = detail::factorial(n);
    return {base.value - sign_n * nf * s.value(),
            base.abs_err_est + 4e-16 * nf * s.abs(), Method::recurrence, base.work + m};
}

// Oracle-grade evaluation of psi^(n)(x) through the regularized split of
// -N-lim int_eps^1 t^{x-1} ln^n t / (1-t) dt: pick r with x + r > 0,
// subtract the geometric partial sum t^i (i < r), integrate the remainder,
// and add the Lemma 2.1/3.2 finite parts of the subtracted pieces.
// n = 0 uses the digamma form -euler_gamma + N-lim int (1-t^{x-1})/(1-t) dt.
inline Evaluation polygamma_neutrix_integral(int n, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (n < 0) throw DomainError("polygamma_neutrix_integral: n must be >= 0");
    if (!std::isfinite(x)) throw DomainError("polygamma_neutrix_integral: x must be finite");

    const double nearest = std::round(x);
    if (nearest <= 0.0 && std::abs(x - nearest) <= cfg.integer_tol) x = nearest;
    const int r = x > 0.0 ? 0 : int(std::floor(-x)) + 1;
    const double c = x + r - 1.0; // exponent of the regularized integrand

    if (n == 0) {
        Evaluation q{0.0, 0.0, Method::regularized_quadrature, 0};
        if (c != 0.0) {
            auto f = [c](double t) { return -std::expm1(c * std::log(t)) / (1.0 - t); };
            q = quad::integrate(f, 0.0, 1.0, cfg.quad);
        }
        detail::CompensatedSum s;
        s.add(-euler_gamma());
        s.add(q.value);
        for (int i = 0; i < r; ++i)
            if (x + i != 0.0) s.add(-1.0 / (x + i));
        return {s.value(), q.abs_err_est + 4e-16 * s.abs(), Method::regularized_quadrature,
                q.work};
    }

    auto f = [c, n](double t) {
        const double lt = std::log(t);
        return std::exp(c * lt) * detail::ipow(lt, n) / (1.0 - t);
    };
    const Evaluation q = quad::integrate(f, 0.0, 1.0, cfg.quad);
    detail::CompensatedSum s;
    s.add(q.value);
    const double nf = detail::factorial(n);
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < r; ++i)
        if (x + i != 0.0) s.add(sign_n * nf / detail::ipow(x + i, n + 1));
    return {-s.value(), q.abs_err_est + 4e-16 * s.abs(), Method::regularized_quadrature,
            q.work};
}

} // namespace neutrix

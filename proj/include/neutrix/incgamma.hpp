#pragma once

#include <cmath>
#include <cstdlib>

#include "neutrix/evaluation.hpp"
#include "neutrix/quadrature.hpp"

namespace neutrix {

// Case analysis of the gamma-function argument alpha.
struct ArgClass {
    enum class Kind { positive, zero, negative_non_integer, negative_integer };
    Kind kind = Kind::positive;
    int m = 0; // alpha == -m for the negative_integer case
};

// alpha within integer_tol of a nonpositive integer snaps to the special
// case; user-entered -2.0 must hit it.
inline ArgClass classify(double alpha, double integer_tol = 1e-12) {
    if (!(integer_tol >= 0.0) || integer_tol > 1e-9)
        throw DomainError("classify: integer_tol must lie in [0, 1e-9]");
    if (!std::isfinite(alpha)) throw DomainError("classify: alpha must be finite");
    const double nearest = std::round(alpha);
    if (nearest <= 0.0 && std::abs(alpha - nearest) <= integer_tol) {
        if (nearest == 0.0) return {ArgClass::Kind::zero, 0};
        return {ArgClass::Kind::negative_integer, int(-nearest)};
    }
    if (alpha > 0.0) return {ArgClass::Kind::positive, 0};
    return {ArgClass::Kind::negative_non_integer, 0};
}

struct EvalConfig {
    double series_tol = 1e-15;
    int max_terms = 600;
    double large_x_switch = 10.0;
    double integer_tol = 1e-12;
    quad::QuadratureConfig quad{};
};

namespace detail {

using neutrix::detail::CompensatedSum;
using neutrix::detail::factorial;
using neutrix::detail::ipow;

inline void validate(const EvalConfig& cfg) {
    if (!(cfg.series_tol > 0.0)) throw DomainError("EvalConfig: series_tol must be > 0");
    if (cfg.max_terms < 8) throw DomainError("EvalConfig: max_terms must be >= 8");
    if (!(cfg.large_x_switch > 1.0)) throw DomainError("EvalConfig: large_x_switch must be > 1");
    if (!(cfg.integer_tol >= 0.0) || cfg.integer_tol > 1e-9)
        throw DomainError("EvalConfig: integer_tol must lie in [0, 1e-9]");
}

// Scaled Maclaurin tail of exp(-u):
//   e^{-u} - sum_{i<m} (-u)^i/i!  ==  (-1)^m u^m exp_tail(u, m)
// with exp_tail(u, m) = sum_{j>=0} (-u)^j/(m+j)!. Stable for all u >= 0.
inline double exp_tail(double u, int m) {
    if (m == 0) return std::exp(-u);
    if (u <= 2.0) {
        double term = 1.0 / factorial(m);
        CompensatedSum s;
        s.add(term);
        for (int j = 1; j < 200; ++j) {
            term *= -u / double(m + j);
            s.add(term);
            if (std::abs(term) < 1e-20 * std::abs(s.value()) + 1e-300) break;
        }
        return s.value();
    }
    CompensatedSum partial; // sum_{i<m} (-u)^i/i!
    double t = 1.0;
    for (int i = 0; i < m; ++i) {
        partial.add(t);
        t *= -u / double(i + 1);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * (std::exp(-u) - partial.value()) / ipow(u, m);
}

// Truncation rule shared by all series: stop at the first k with k > x and
// |term_k| < series_tol * |S_k|; the k > x guard prevents premature exit
// before the series' largest term.
inline bool series_done(int k, double x, double term, double partial, double tol) {
    return k > x && (std::abs(term) <= tol * std::abs(partial) || std::abs(term) < 1e-305);
}

} // namespace detail

// gamma(alpha, x) = sum_k (-1)^k x^{alpha+k} / (k! (alpha+k)),
// valid for every alpha that is not a nonpositive integer.
inline Evaluation series_generic(double alpha, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (!(x > 0.0)) throw DomainError("series_generic: x must be positive");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("series_generic: alpha must not be a nonpositive integer");

    detail::CompensatedSum s;
    double base = std::pow(x, alpha); // (-1)^k x^{alpha+k}/k!
    int k = 0;
    for (;;) {
        const double term = base / (alpha + k);
        s.add(term);
        if (detail::series_done(k, x, term, s.value(), cfg.series_tol)) break;
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("series_generic: max_terms exceeded");
        base *= -x / double(k);
    }
    const double next = std::abs(base * x / double(k + 1) / (alpha + k + 1));
    const double q = x / double(k + 2);
    const double tail = next / (1.0 - q);
    return {s.value(), tail + 4e-16 * s.abs(), Method::series, k + 1};
}

// gamma(0, x) = sum_{k>=1} (-x)^k/(k k!) + ln x.
inline Evaluation series_zero(double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (!(x > 0.0)) throw DomainError("series_zero: x must be positive");
    detail::CompensatedSum s;
    s.add(std::log(x));
    double base = -x; // (-x)^k/k!
    int k = 1;
    for (;;) {
        const double term = base / double(k);
        s.add(term);
        if (detail::series_done(k, x, term, s.value(), cfg.series_tol)) break;
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("series_zero: max_terms exceeded");
        base *= -x / double(k);
    }
    const double next = std::abs(base * x / double(k + 1) / double(k + 1));
    const double q = x / double(k + 2);
    return {s.value(), next / (1.0 - q) + 4e-16 * s.abs(), Method::series, k};
}

// gamma(-m, x) = sum_{k != m} (-1)^k x^{k-m}/(k!(k-m)) + (-1)^m ln(x)/m!.
inline Evaluation series_neg_int(int m, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (m < 1) throw DomainError("series_neg_int: m must be >= 1");
    if (!(x > 0.0)) throw DomainError("series_neg_int: x must be positive");
    detail::CompensatedSum s;
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    s.add(sign_m * std::log(x) / detail::factorial(m));
    double base = std::pow(x, -double(m)); // (-1)^k x^{k-m}/k!
    int k = 0;
    for (;;) {
        if (k != m) {
            const double term = base / double(k - m);
            s.add(term);
            if (k > m && detail::series_done(k, x, term, s.value(), cfg.series_tol)) break;
        }
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("series_neg_int: max_terms exceeded");
        base *= -x / double(k);
    }
    const double next = std::abs(base * x / double(k + 1) / double(k + 1 - m));
    const double q = x / double(k + 2);
    return {s.value(), next / (1.0 - q) + 4e-16 * s.abs(), Method::series, k + 1};
}

// gamma(alpha, x) for -m < alpha < -m+1 via the regularized integral
//   int_0^x u^{alpha-1} [e^{-u} - sum_{i<m} (-u)^i/i!] du
//   + sum_{i<m} (-1)^i x^{alpha+i} / ((alpha+i) i!).
// m = 0 (alpha > 0) means an empty correction sum.
inline Evaluation regularized_integral(double alpha, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (!(x > 0.0)) throw DomainError("regularized_integral: x must be positive");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("regularized_integral: alpha must not be a nonpositive integer");
    const int m = alpha > 0.0 ? 0 : int(std::floor(-alpha)) + 1;
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;

    auto f = [alpha, m, sign_m](double u) {
        return sign_m * std::pow(u, alpha + m - 1.0) * detail::exp_tail(u, m);
    };
    const Evaluation q = quad::integrate(f, 0.0, x, cfg.quad);

    detail::CompensatedSum corr;
    double c = std::pow(x, alpha); // (-1)^i x^{alpha+i}/i!
    for (int i = 0; i < m; ++i) {
        corr.add(c / (alpha + i));
        c *= -x / double(i + 1);
    }
    return {q.value + corr.value(), q.abs_err_est + 4e-16 * corr.abs(),
            Method::regularized_quadrature, q.work};
}

// gamma(alpha, x) reconstructed from gamma(alpha+steps, x) by unwinding
// gamma(alpha+1,x) = alpha gamma(alpha,x) - x^alpha e^{-x}:
//   gamma(alpha,x) = gamma(alpha+s,x)/(alpha)_s
//                  + e^{-x} sum_{k<s} x^{alpha+k}/(alpha)_{k+1}.
inline Evaluation recurrence_shift(double alpha, double x, int steps, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (steps < 1) throw DomainError("recurrence_shift: steps must be >= 1");
    if (!(x > 0.0)) throw DomainError("recurrence_shift: x must be positive");
    for (int k = 0; k < steps; ++k)
        if (alpha + k == 0.0)
            throw DomainError("recurrence_shift: shift denominator alpha+k vanishes");

    const Evaluation top = series_generic(alpha + steps, x, cfg);
    detail::CompensatedSum s;
    double poch = 1.0;                 // (alpha)_k
    double xp = std::pow(x, alpha);    // x^{alpha+k}
    const double ex = std::exp(-x);
    for (int k = 0; k < steps; ++k) {
        poch *= alpha + k;             // (alpha)_{k+1}
        s.add(ex * xp / poch);
        xp *= x;
    }
    s.add(top.value / poch);
    return {s.value(), top.abs_err_est / std::abs(poch) + 4e-16 * s.abs(),
            Method::recurrence, top.work + steps};
}

// Residual of gamma(-m,x) + gamma(-m+1,x)/m = (-1)^m/(m m!) - e^{-x} x^{-m}/m,
// computed from this module's own evaluators; expected ~ 0.
inline double neg_int_identity_residual(int m, double x, const EvalConfig& cfg = {}) {
    if (m < 1) throw DomainError("neg_int_identity_residual: m must be >= 1");
    const Evaluation gm = series_neg_int(m, x, cfg);
    const Evaluation gm1 = (m == 1) ? series_zero(x, cfg) : series_neg_int(m - 1, x, cfg);
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    const double rhs = sign_m / (m * detail::factorial(m)) -
                       std::exp(-x) * std::pow(x, -double(m)) / double(m);
    return gm.value + gm1.value / double(m) - rhs;
}

namespace detail {

// Shared k-sum for the alpha-derivatives: each exponential-series term
// contributes (-1)^k/k! times the Lemma 2.1 finite part of
// int u^{alpha+k-1} ln^r u du, with skip_k marking the log term (if any).
inline Evaluation deriv_series_sum(double alpha, double x, int r, int skip_k,
                                   const EvalConfig& cfg) {
    CompensatedSum s;
    double invfact = 1.0; // (-1)^k / k!
    int k = 0;
    for (;;) {
        if (k != skip_k) {
            const double term = invfact * quad::lemma21_finite_part(alpha + k - 1.0, r, x);
            s.add(term);
            if (k > skip_k && series_done(k, x, term, s.value(), cfg.series_tol)) break;
        }
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("deriv_series: max_terms exceeded");
        invfact /= -double(k);
    }
    return {s.value(), 4e-16 * s.abs(), Method::series, k + 1};
}

} // namespace detail

// r-th alpha-derivative of gamma(alpha, x) for non-nonpositive-integer alpha:
//   sum_k (-1)^k/k! * N-lim int_eps^x u^{alpha+k-1} ln^r u du.
inline Evaluation deriv_series_generic(double alpha, double x, int r, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (r < 1) throw DomainError("deriv_series_generic: r must be >= 1");
    if (!(x > 0.0)) throw DomainError("deriv_series_generic: x must be positive");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("deriv_series_generic: alpha must not be a nonpositive integer");
    Evaluation ev = detail::deriv_series_sum(alpha, x, r, -1, cfg);
    ev.abs_err_est += std::abs(ev.value) * 1e-14;
    return ev;
}

// r-th alpha-derivative at alpha = -m: the k = m term integrates to
// (-1)^m ln^{r+1}(x) / ((r+1) m!) instead of a Lemma 2.1 power term.
inline Evaluation deriv_series_neg_int(int m, double x, int r, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (m < 1) throw DomainError("deriv_series_neg_int: m must be >= 1");
    if (r < 1) throw DomainError("deriv_series_neg_int: r must be >= 1");
    if (!(x > 0.0)) throw DomainError("deriv_series_neg_int: x must be positive");
    Evaluation ev = detail::deriv_series_sum(-double(m), x, r, m, cfg);
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    ev.value += sign_m * detail::ipow(std::log(x), r + 1) / ((r + 1) * detail::factorial(m));
    ev.abs_err_est += std::abs(ev.value) * 1e-14;
    return ev;
}

namespace detail {

// gamma(-m, x) (m >= 0) at large x: the alternating series loses all
// precision, so split the neutrix definition over (eps,1) u (1,x).
inline Evaluation neg_int_large_x(int m, double x, const EvalConfig& cfg) {
    const Evaluation head = (m == 0) ? series_zero(1.0, cfg) : series_neg_int(m, 1.0, cfg);
    auto f = [m](double u) { return std::pow(u, -double(m) - 1.0) * std::exp(-u); };
    const Evaluation tail = quad::integrate(f, 1.0, x, cfg.quad);
    return {head.value + tail.value, head.abs_err_est + tail.abs_err_est,
            Method::regularized_quadrature, head.work + tail.work};
}

} // namespace detail

// gamma(alpha, x) for all real alpha and x > 0 (the neutrix value at
// nonpositive integers); dispatches on the argument class and on the
// large-x switch.
inline Evaluation lower_gamma(double alpha, double x, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (!(x > 0.0)) throw DomainError("lower_gamma: x must be positive");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    switch (cls.kind) {
        case ArgClass::Kind::positive:
        case ArgClass::Kind::negative_non_integer:
            return x <= cfg.large_x_switch ? series_generic(alpha, x, cfg)
                                           : regularized_integral(alpha, x, cfg);
        case ArgClass::Kind::zero:
            return x <= cfg.large_x_switch ? series_zero(x, cfg)
                                           : detail::neg_int_large_x(0, x, cfg);
        case ArgClass::Kind::negative_integer:
            return x <= cfg.large_x_switch ? series_neg_int(cls.m, x, cfg)
                                           : detail::neg_int_large_x(cls.m, x, cfg);
    }
    throw DomainError("lower_gamma: unreachable");
}

// gamma^(r)(alpha, x) for all real alpha, r >= 1. Beyond the large-x
// switch the additivity of the defining integral gives
// gamma^(r)(alpha,x) = gamma^(r)(alpha,1) + int_1^x u^{alpha-1} ln^r u e^{-u} du.
inline Evaluation lower_gamma_deriv(double alpha, double x, int r, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (r < 1) throw DomainError("lower_gamma_deriv: r must be >= 1");
    if (!(x > 0.0)) throw DomainError("lower_gamma_deriv: x must be positive");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    const bool integer_case = cls.kind == ArgClass::Kind::zero ||
                              cls.kind == ArgClass::Kind::negative_integer;
    if (x <= cfg.large_x_switch) {
        if (!integer_case) return deriv_series_generic(alpha, x, r, cfg);
        Evaluation ev = detail::deriv_series_sum(-double(cls.m), x, r, cls.m, cfg);
        const double sign_m = (cls.m % 2 == 0) ? 1.0 : -1.0;
        ev.value += sign_m * detail::ipow(std::log(x), r + 1) /
                    ((r + 1) * detail::factorial(cls.m));
        return ev;
    }
    const Evaluation head = lower_gamma_deriv(alpha, 1.0, r, cfg);
    auto f = [alpha, r](double u) {
        return std::pow(u, alpha - 1.0) * detail::ipow(std::log(u), r) * std::exp(-u);
    };
    const Evaluation tail = quad::integrate(f, 1.0, x, cfg.quad);
    return {head.value + tail.value, head.abs_err_est + tail.abs_err_est,
            Method::regularized_quadrature, head.work + tail.work};
}

} // namespace neutrix

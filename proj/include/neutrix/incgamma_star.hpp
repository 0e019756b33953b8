#pragma once

#include <cmath>

#include "neutrix/evaluation.hpp"
#include "neutrix/incgamma.hpp"
#include "neutrix/quadrature.hpp"

namespace neutrix {

// Negative argument x of gamma_star, carried together with x_minus = -x > 0.
// All integrals run over v = |u| in (0, x_minus), where the integrand is
// v^{alpha-1} e^v and gamma_star(alpha, x_minus) = -int_0^{x_minus} v^{alpha-1} e^v dv.
struct NegativeArgument {
    double x;
    double x_minus;

    explicit NegativeArgument(double x_) : x(x_), x_minus(-x_) {
        if (!(x_ < 0.0)) throw DomainError("NegativeArgument: x must be negative");
        if (!std::isfinite(x_)) throw DomainError("NegativeArgument: x must be finite");
    }
};

namespace detail {

// Maclaurin tail of exp(+v), scaled:
//   e^v - sum_{i<m} v^i/i!  ==  v^m exp_pos_tail(v, m)
// with exp_pos_tail(v, m) = sum_{j>=0} v^j/(m+j)!; all terms positive.
inline double exp_pos_tail(double v, int m) {
    if (m == 0) return std::exp(v);
    if (v <= 2.0) {
        double term = 1.0 / factorial(m);
        CompensatedSum s;
        s.add(term);
        for (int j = 1; j < 200; ++j) {
            term *= v / double(m + j);
            s.add(term);
            if (term < 1e-20 * s.value()) break;
        }
        return s.value();
    }
    CompensatedSum partial; // sum_{i<m} v^i/i!
    double t = 1.0;
    for (int i = 0; i < m; ++i) {
        partial.add(t);
        t *= v / double(i + 1);
    }
    return (std::exp(v) - partial.value()) / ipow(v, m);
}

// Oriented integral: int_a^b even when b < a.
template <class F>
Evaluation oriented_integrate(F&& f, double a, double b, const quad::QuadratureConfig& cfg) {
    if (a == b) return {0.0, 0.0, Method::regularized_quadrature, 0};
    if (a < b) return quad::integrate(f, a, b, cfg);
    Evaluation ev = quad::integrate(f, b, a, cfg);
    ev.value = -ev.value;
    return ev;
}

} // namespace detail

// gamma_star(alpha, x_minus) = -sum_k x_minus^{alpha+k} / ((alpha+k) k!),
// for every alpha that is not a nonpositive integer.
inline Evaluation star_series_generic(double alpha, const NegativeArgument& arg,
                                      const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("star_series_generic: alpha must not be a nonpositive integer");
    const double y = arg.x_minus;
    detail::CompensatedSum s;
    double base = std::pow(y, alpha); // x_minus^{alpha+k}/k!
    int k = 0;
    for (;;) {
        const double term = -base / (alpha + k);
        s.add(term);
        if (detail::series_done(k, y, term, s.value(), cfg.series_tol)) break;
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("star_series_generic: max_terms exceeded");
        base *= y / double(k);
    }
    const double next = std::abs(base * y / double(k + 1) / (alpha + k + 1));
    const double q = y / double(k + 2);
    return {s.value(), next / (1.0 - q) + 4e-16 * s.abs(), Method::series, k + 1};
}

// gamma_star(0, x_minus) = -sum_{k>=1} x_minus^k/(k k!) - ln x_minus.
inline Evaluation star_series_zero(const NegativeArgument& arg, const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    const double y = arg.x_minus;
    detail::CompensatedSum s;
    s.add(-std::log(y));
    double base = y; // x_minus^k/k!
    int k = 1;
    for (;;) {
        const double term = -base / double(k);
        s.add(term);
        if (detail::series_done(k, y, term, s.value(), cfg.series_tol)) break;
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("star_series_zero: max_terms exceeded");
        base *= y / double(k);
    }
    const double next = std::abs(base * y / double(k + 1) / double(k + 1));
    const double q = y / double(k + 2);
    return {s.value(), next / (1.0 - q) + 4e-16 * s.abs(), Method::series, k};
}

// gamma_star(-m, x_minus) = sum_{k != m} x_minus^{k-m}/((m-k) k!) - ln(x_minus)/m!.
inline Evaluation star_series_neg_int(int m, const NegativeArgument& arg,
                                      const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (m < 1) throw DomainError("star_series_neg_int: m must be >= 1");
    const double y = arg.x_minus;
    detail::CompensatedSum s;
    s.add(-std::log(y) / detail::factorial(m));
    double base = std::pow(y, -double(m)); // x_minus^{k-m}/k!
    int k = 0;
    for (;;) {
        if (k != m) {
            const double term = base / double(m - k);
            s.add(term);
            if (k > m && detail::series_done(k, y, term, s.value(), cfg.series_tol)) break;
        }
        ++k;
        if (k > cfg.max_terms)
            throw ConvergenceFailure("star_series_neg_int: max_terms exceeded");
        base *= y / double(k);
    }
    const double next = std::abs(base * y / double(k + 1) / double(m - k - 1));
    const double q = y / double(k + 2);
    return {s.value(), next / (1.0 - q) + 4e-16 * s.abs(), Method::series, k + 1};
}

// gamma_star(alpha, x_minus) for -m < alpha < -m+1 via the regularized
// integral (v = |u| substitution):
//   -int_0^{x_minus} v^{alpha-1} [e^v - sum_{i<m} v^i/i!] dv
//   - sum_{i<m} x_minus^{alpha+i} / ((alpha+i) i!).
inline Evaluation star_regularized(double alpha, const NegativeArgument& arg,
                                   const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("star_regularized: alpha must not be a nonpositive integer");
    const int m = alpha > 0.0 ? 0 : int(std::floor(-alpha)) + 1;
    const double y = arg.x_minus;

    auto f = [alpha, m](double v) {
        return -std::pow(v, alpha + m - 1.0) * detail::exp_pos_tail(v, m);
    };
    const Evaluation q = quad::integrate(f, 0.0, y, cfg.quad);

    detail::CompensatedSum corr;
    double c = std::pow(y, alpha); // x_minus^{alpha+i}/i!
    for (int i = 0; i < m; ++i) {
        corr.add(-c / (alpha + i));
        c *= y / double(i + 1);
    }
    return {q.value + corr.value(), q.abs_err_est + 4e-16 * corr.abs(),
            Method::regularized_quadrature, q.work};
}

namespace detail {

// gamma_star(-m, x_minus) with the order-(m+1) Maclaurin subtraction over
// the whole range (0, x_minus); the subtracted integrand is v^{m+1} times
// exp_pos_tail(v, m+1), so nothing is singular:
//   -int_0^{x_minus} exp_pos_tail(v, m+1) dv
//   + sum_{i<m} x_minus^{i-m}/((m-i) i!) - ln(x_minus)/m!.
inline Evaluation star_negint_whole(int m, double y, const EvalConfig& cfg) {
    auto f = [m](double v) { return -exp_pos_tail(v, m + 1); };
    const Evaluation q = quad::integrate(f, 0.0, y, cfg.quad);
    CompensatedSum s;
    s.add(q.value);
    double inv_fact = 1.0; // 1/i!
    double yp = std::pow(y, -double(m));
    for (int i = 0; i < m; ++i) {
        s.add(yp * inv_fact / double(m - i));
        yp *= y;
        inv_fact /= double(i + 1);
    }
    s.add(-std::log(y) / factorial(m));
    return {s.value(), q.abs_err_est + 4e-16 * s.abs(), Method::regularized_quadrature, q.work};
}

// Split form: subtraction only on (0,1), the bare integrand on (1, x_minus),
// and the constant sum_{i<m} 1/((m-i) i!).
inline Evaluation star_negint_split(int m, double y, const EvalConfig& cfg) {
    auto f0 = [m](double v) { return -exp_pos_tail(v, m + 1); };
    const Evaluation q0 = quad::integrate(f0, 0.0, 1.0, cfg.quad);
    auto f1 = [m](double v) { return -std::pow(v, -double(m) - 1.0) * std::exp(v); };
    const Evaluation q1 = oriented_integrate(f1, 1.0, y, cfg.quad);
    CompensatedSum s;
    s.add(q0.value);
    s.add(q1.value);
    double inv_fact = 1.0;
    for (int i = 0; i < m; ++i) {
        s.add(inv_fact / double(m - i));
        inv_fact /= double(i + 1);
    }
    return {s.value(), q0.abs_err_est + q1.abs_err_est + 4e-16 * s.abs(),
            Method::regularized_quadrature, q0.work + q1.work};
}

} // namespace detail

// gamma_star(-m, x_minus) by regularized quadrature; uses the split form
// beyond x_minus = 1 where the subtracted Maclaurin sum would grow.
inline Evaluation star_neg_int_regularized(int m, const NegativeArgument& arg,
                                           const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (m < 1) throw DomainError("star_neg_int_regularized: m must be >= 1");
    return arg.x_minus <= 1.0 ? detail::star_negint_whole(m, arg.x_minus, cfg)
                              : detail::star_negint_split(m, arg.x_minus, cfg);
}

// Forward declaration for star_recurrence.
inline Evaluation gamma_star(double alpha, const NegativeArgument& arg, const EvalConfig& cfg);

// gamma_star(alpha+1, x_minus) = -alpha gamma_star(alpha, x_minus)
//                                - x_minus^alpha e^{x_minus}.
// Integration by parts of the defining integral; invalid at nonpositive
// integer alpha, where the boundary term leaves a finite anomaly.
inline Evaluation star_recurrence(double alpha, const NegativeArgument& arg,
                                  const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    if (cls.kind == ArgClass::Kind::zero)
        throw DomainError("star_recurrence: alpha must be nonzero");
    if (cls.kind == ArgClass::Kind::negative_integer)
        throw DomainError("star_recurrence: alpha must not be a negative integer");
    const Evaluation base = gamma_star(alpha, arg, cfg);
    const double boundary = std::pow(arg.x_minus, alpha) * std::exp(arg.x_minus);
    return {-alpha * base.value - boundary,
            std::abs(alpha) * base.abs_err_est + 4e-16 * std::abs(boundary),
            Method::recurrence, base.work + 1};
}

// gamma_star(alpha, x_minus) for all real alpha; series below the large-x
// switch, regularized quadrature beyond it.
inline Evaluation gamma_star(double alpha, const NegativeArgument& arg,
                             const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    const bool small = arg.x_minus <= cfg.large_x_switch;
    switch (cls.kind) {
        case ArgClass::Kind::positive:
        case ArgClass::Kind::negative_non_integer:
            return small ? star_series_generic(alpha, arg, cfg)
                         : star_regularized(alpha, arg, cfg);
        case ArgClass::Kind::zero:
            return star_series_zero(arg, cfg);
        case ArgClass::Kind::negative_integer:
            return small ? star_series_neg_int(cls.m, arg, cfg)
                         : star_neg_int_regularized(cls.m, arg, cfg);
    }
    throw DomainError("gamma_star: unreachable");
}

// r-th alpha-derivative of gamma_star.
//   alpha = 0:   -int_1^{x_minus} v^{-1} ln^r v e^v dv
//                - int_0^1 v^{-1} ln^r v (e^v - 1) dv
//   alpha = -m:  the same split with the order-(m+1) subtraction on (0,1)
//                plus the constant sum_{i<m} r! (m-i)^{-r-1} / i!
//   otherwise:   the differentiated regularized integral with Lemma 2.1
//                finite parts as correction terms.
inline Evaluation star_deriv(double alpha, const NegativeArgument& arg, int r,
                             const EvalConfig& cfg = {}) {
    detail::validate(cfg);
    if (r < 1) throw DomainError("star_deriv: r must be >= 1");
    const ArgClass cls = classify(alpha, cfg.integer_tol);
    const double y = arg.x_minus;

    if (cls.kind == ArgClass::Kind::zero || cls.kind == ArgClass::Kind::negative_integer) {
        const int m = cls.m;
        auto f_tail = [m, r](double v) {
            return -std::pow(v, -double(m) - 1.0) * detail::ipow(std::log(v), r) * std::exp(v);
        };
        const Evaluation q1 = detail::oriented_integrate(f_tail, 1.0, y, cfg.quad);
        auto f_head = [m, r](double v) {
            // v^{-m-1} [e^v - sum_{i<=m} v^i/i!] = exp_pos_tail(v, m+1); for
            // m = 0 this is (e^v - 1)/v.
            return -detail::ipow(std::log(v), r) * detail::exp_pos_tail(v, m + 1);
        };
        const Evaluation q0 = quad::integrate(f_head, 0.0, 1.0, cfg.quad);
        detail::CompensatedSum s;
        s.add(q0.value);
        s.add(q1.value);
        double inv_fact = 1.0;
        const double rfact = detail::factorial(r);
        for (int i = 0; i < m; ++i) {
            s.add(rfact * inv_fact / detail::ipow(double(m - i), r + 1));
            inv_fact /= double(i + 1);
        }
        return {s.value(), q0.abs_err_est + q1.abs_err_est + 4e-16 * s.abs(),
                Method::regularized_quadrature, q0.work + q1.work};
    }

    const int m = alpha > 0.0 ? 0 : int(std::floor(-alpha)) + 1;
    auto f = [alpha, m, r](double v) {
        return -std::pow(v, alpha + m - 1.0) * detail::ipow(std::log(v), r) *
               detail::exp_pos_tail(v, m);
    };
    const Evaluation q = quad::integrate(f, 0.0, y, cfg.quad);
    detail::CompensatedSum corr;
    double inv_fact = 1.0;
    for (int i = 0; i < m; ++i) {
        corr.add(-quad::lemma21_finite_part(alpha + i - 1.0, r, y) * inv_fact);
        inv_fact /= double(i + 1);
    }
    return {q.value + corr.value(), q.abs_err_est + 4e-16 * corr.abs(),
            Method::regularized_quadrature, q.work};
}

} // namespace neutrix

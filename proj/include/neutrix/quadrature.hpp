#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "neutrix/evaluation.hpp"

namespace neutrix::quad {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

namespace detail {

using neutrix::detail::CompensatedSum;
using neutrix::detail::factorial;
using neutrix::detail::ipow;

inline void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
    if (!(cfg.rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
    if (cfg.max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

// Gauss 7 / Kronrod 15 pair on [-1,1]. Nodes ordered outermost first;
// odd indices (and the centre) carry the embedded Gauss rule.
inline constexpr double kK15Node[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
inline constexpr double kK15Weight[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kG7Weight[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double s0, s1;
    double val, err;
};

// One G7/K15 evaluation; err is the difference between the nested rules.
template <class G>
Panel eval_panel(G&& g, double s0, double s1) {
    const double c = 0.5 * (s0 + s1);
    const double h = 0.5 * (s1 - s0);
    const double fc = g(c);
    double k15 = kK15Weight[7] * fc;
    double g7 = kG7Weight[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kK15Node[i];
        const double fs = g(c + dx) + g(c - dx);
        k15 += kK15Weight[i] * fs;
        if (i % 2 == 1) g7 += kG7Weight[i / 2] * fs;
    }
    k15 *= h;
    g7 *= h;
    return Panel{s0, s1, k15, std::abs(k15 - g7)};
}

} // namespace detail

// Adaptive quadrature of f over (a,b), robust to integrable endpoint
// singularities u^beta with beta in (-1,0) and to log factors.
//
// The interval is reparametrized by a logistic of (2s-1)/(s(1-s)), which
// clusters nodes double-exponentially at both endpoints; the transformed
// integrand then vanishes smoothly there and plain nested-rule panels
// converge. Panels are split worst-error-first until
// sum(err) <= max(abs_tol, rel_tol*|value|).
template <class F>
Evaluation integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    detail::validate(cfg);
    if (!(a < b)) throw DomainError("integrate: requires a < b");
    const double width = b - a;

    auto g = [&](double s) -> double {
        const double den = s * (1.0 - s);
        if (!(den > 0.0)) return 0.0;
        const double t = (2.0 * s - 1.0) / den;
        double e, p;
        if (t < 0.0) {
            e = std::exp(t);
            p = e / (1.0 + e);
        } else {
            e = std::exp(-t);
            p = 1.0 / (1.0 + e);
        }
        const double q = e / ((1.0 + e) * (1.0 + e)); // p(1-p)
        const double jac = width * q * (2.0 * s * s - 2.0 * s + 1.0) / (den * den);
        if (!(jac > 0.0) || !std::isfinite(jac)) return 0.0;
        const double u = a + width * p;
        if (!(u > a) || !(u < b)) return 0.0;
        return f(u) * jac;
    };

    std::vector<detail::Panel> panels;
    constexpr int kInitial = 8;
    panels.reserve(64);
    for (int i = 0; i < kInitial; ++i)
        panels.push_back(detail::eval_panel(g, i / double(kInitial), (i + 1) / double(kInitial)));

    auto worse = [](const detail::Panel& x, const detail::Panel& y) { return x.err < y.err; };
    std::make_heap(panels.begin(), panels.end(), worse);

    auto totals = [&](double& val, double& err) {
        detail::CompensatedSum v, e;
        for (const auto& p : panels) {
            v.add(p.val);
            e.add(p.err);
        }
        val = v.value();
        err = e.value();
    };

    double val, err;
    totals(val, err);
    int splits = 0;
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(val)) || !std::isfinite(val)) {
        if (splits >= cfg.max_subdivisions)
            throw ConvergenceFailure("integrate: tolerance unmet after max_subdivisions");
        std::pop_heap(panels.begin(), panels.end(), worse);
        const detail::Panel top = panels.back();
        panels.pop_back();
        const double mid = 0.5 * (top.s0 + top.s1);
        panels.push_back(detail::eval_panel(g, top.s0, mid));
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(detail::eval_panel(g, mid, top.s1));
        std::push_heap(panels.begin(), panels.end(), worse);
        ++splits;
        totals(val, err);
    }
    return Evaluation{val, err, Method::regularized_quadrature,
                      std::int64_t(kInitial + 2 * splits)};
}

// Antiderivative of ln^r|u|:
//   sum_{i=0}^{r-1} (-1)^i r!/(r-i)! u ln^{r-i}|u| + (-1)^r r! u.
inline double log_power_antiderivative(double u, int r) {
    if (u == 0.0) throw DomainError("log_power_antiderivative: u must be nonzero");
    if (r < 1) throw DomainError("log_power_antiderivative: r must be >= 1");
    const double L = std::log(std::abs(u));
    detail::CompensatedSum s;
    double coeff = 1.0; // (-1)^i r!/(r-i)!
    for (int i = 0; i < r; ++i) {
        s.add(coeff * u * detail::ipow(L, r - i));
        coeff *= -double(r - i);
    }
    s.add(coeff * u); // coeff = (-1)^r r!
    return s.value();
}

// Antiderivative of u^{-s-1} ln^r|u|:
//   -sum_{i=0}^{r-1} r!/(r-i)! s^{-i-1} u^{-s} ln^{r-i}|u| - r! s^{-r-1} u^{-s}.
inline double power_log_antiderivative(double u, int s, int r) {
    if (u == 0.0) throw DomainError("power_log_antiderivative: u must be nonzero");
    if (s < 1 || r < 1) throw DomainError("power_log_antiderivative: r and s must be >= 1");
    const double L = std::log(std::abs(u));
    const double um = 1.0 / detail::ipow(u, s);
    detail::CompensatedSum acc;
    double coeff = 1.0 / double(s); // r!/(r-i)! s^{-i-1}
    for (int i = 0; i < r; ++i) {
        acc.add(-coeff * um * detail::ipow(L, r - i));
        coeff *= double(r - i) / double(s);
    }
    acc.add(-coeff * um); // coeff = r! s^{-r-1}
    return acc.value();
}

// Neutrix limit of int_eps^1 t^{-m-1} ln^n t dt  =  -n!/m^{n+1}.
inline double log_moment_finite_part(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("log_moment_finite_part: m and n must be >= 1");
    return -detail::factorial(n) / detail::ipow(double(m), n + 1);
}

// Neutrix limit of int_eps^x u^alpha ln^r u du for x > 0:
//   alpha == -1: ln^{r+1}(x)/(r+1)
//   otherwise:   sum_{k=0}^{r-1} (-1)^k r! x^{a+1} ln^{r-k}x / ((a+1)^{k+1}(r-k)!)
//                + (-1)^r r! x^{a+1}/(a+1)^{r+1}
inline double lemma21_finite_part(double alpha, int r, double x) {
    if (!(x > 0.0)) throw DomainError("lemma21_finite_part: x must be positive");
    if (r < 0) throw DomainError("lemma21_finite_part: r must be >= 0");
    const double L = std::log(x);
    if (alpha == -1.0) return detail::ipow(L, r + 1) / double(r + 1);
    const double a1 = alpha + 1.0;
    const double p = std::pow(x, a1);
    if (r == 0) return p / a1;
    detail::CompensatedSum s;
    double coeff = 1.0 / a1; // (-1)^k r!/((a1)^{k+1}(r-k)!)
    for (int k = 0; k < r; ++k) {
        s.add(coeff * p * detail::ipow(L, r - k));
        coeff *= -double(r - k) / a1;
    }
    s.add(coeff * p); // coeff = (-1)^r r!/a1^{r+1}
    return s.value();
}

} // namespace neutrix::quad

#pragma once

// Extended-precision adaptive quadrature used only to sample oracle
// integral families for the verification suites. Independent of
// quad::integrate so the oracle does not share the code path it checks.

#include <algorithm>
#include <cmath>
#include <vector>

#include "neutrix/evaluation.hpp"

namespace neutrix::oracle {

namespace detail {

inline constexpr long double kNode[8] = {
    0.991455371120812639206854697526329L,
    0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L,
    0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L,
    0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L,
    0.0L,
};
inline constexpr long double kWeightK[8] = {
    0.022935322010529224963732008058970L,
    0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L,
    0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L,
    0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L,
    0.209482141084727828012999174891714L,
};
inline constexpr long double kWeightG[4] = {
    0.129484966168869693270611432679082L,
    0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L,
    0.417959183673469387755102040816327L,
};

struct Panel {
    long double s0, s1, val, err;
};

template <class G>
Panel eval_panel(G&& g, long double s0, long double s1) {
    const long double c = 0.5L * (s0 + s1);
    const long double h = 0.5L * (s1 - s0);
    const long double fc = g(c);
    long double k15 = kWeightK[7] * fc;
    long double g7 = kWeightG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const long double dx = h * kNode[i];
        const long double fs = g(c + dx) + g(c - dx);
        k15 += kWeightK[i] * fs;
        if (i % 2 == 1) g7 += kWeightG[i / 2] * fs;
    }
    k15 *= h;
    g7 *= h;
    return Panel{s0, s1, k15, std::abs(k15 - g7)};
}

} // namespace detail

// f over (a,b) with the same endpoint-clustering reparametrization as the
// production integrator, in long double.
template <class F>
long double integrate(F&& f, long double a, long double b, long double rel_tol = 1e-17L,
                      int max_subdivisions = 8000) {
    if (!(a < b)) throw DomainError("oracle::integrate: requires a < b");
    const long double width = b - a;
    auto g = [&](long double s) -> long double {
        const long double den = s * (1.0L - s);
        if (!(den > 0.0L)) return 0.0L;
        const long double t = (2.0L * s - 1.0L) / den;
        long double e, p;
        if (t < 0.0L) {
            e = std::exp(t);
            p = e / (1.0L + e);
        } else {
            e = std::exp(-t);
            p = 1.0L / (1.0L + e);
        }
        const long double q = e / ((1.0L + e) * (1.0L + e));
        const long double jac = width * q * (2.0L * s * s - 2.0L * s + 1.0L) / (den * den);
        if (!(jac > 0.0L) || !std::isfinite(double(jac))) return 0.0L;
        const long double u = a + width * p;
        if (!(u > a) || !(u < b)) return 0.0L;
        return f(u) * jac;
    };

    std::vector<detail::Panel> panels;
    constexpr int kInitial = 8;
    for (int i = 0; i < kInitial; ++i)
        panels.push_back(
            detail::eval_panel(g, i / (long double)kInitial, (i + 1) / (long double)kInitial));
    auto worse = [](const detail::Panel& x, const detail::Panel& y) { return x.err < y.err; };
    std::make_heap(panels.begin(), panels.end(), worse);

    auto totals = [&](long double& val, long double& err) {
        val = 0.0L;
        err = 0.0L;
        for (const auto& p : panels) {
            val += p.val;
            err += p.err;
        }
    };
    long double val, err;
    totals(val, err);
    int splits = 0;
    while (err > std::max((long double)1e-300L, rel_tol * std::abs(val)) ||
           !std::isfinite(double(val))) {
        if (splits >= max_subdivisions)
            throw ConvergenceFailure("oracle::integrate: tolerance unmet after max_subdivisions");
        std::pop_heap(panels.begin(), panels.end(), worse);
        const detail::Panel top = panels.back();
        panels.pop_back();
        const long double mid = 0.5L * (top.s0 + top.s1);
        panels.push_back(detail::eval_panel(g, top.s0, mid));
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(detail::eval_panel(g, mid, top.s1));
        std::push_heap(panels.begin(), panels.end(), worse);
        ++splits;
        totals(val, err);
    }
    return val;
}

} // namespace neutrix::oracle

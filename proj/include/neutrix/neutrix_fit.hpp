#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "neutrix/evaluation.hpp"

namespace neutrix::fit {

// One negligible basis function eps^lambda ln^r(eps).
// lambda < 0 with r >= 0, or lambda == 0 with r >= 1; the constant
// (0,0) is the finite part itself and never a basis member.
struct NegligibleTerm {
    double lambda = 0.0;
    int log_power = 0;
};

inline bool operator==(const NegligibleTerm& a, const NegligibleTerm& b) {
    return a.lambda == b.lambda && a.log_power == b.log_power;
}

// One vanishing Taylor term eps^power ln^r(eps) of a sampled integral
// family. Such terms converge to zero and are negligible by definition;
// modelling them removes the small-eps remainder of integrand expansions,
// which would otherwise bias the fitted constant at reachable grid depths.
struct ConvergentTerm {
    double power = 1.0; // > 0
    int log_power = 0;
};

// Geometric sampling grid eps_j = eps0 * ratio^j, j = 0..count-1.
struct EpsilonGrid {
    double eps0 = 0.1;
    double ratio = 0.6;
    int count = 0;
};

inline EpsilonGrid default_grid(std::size_t basis_size) {
    return EpsilonGrid{0.1, 0.6, int(basis_size) + 8};
}

struct NeutrixFit {
    double finite_part = 0.0;
    std::vector<std::pair<NegligibleTerm, double>> coefficients;
    double residual_rms = 0.0;
    double condition_estimate = 1.0;
};

namespace detail {

inline void validate_basis(const std::vector<NegligibleTerm>& basis) {
    for (const auto& t : basis) {
        if (!std::isfinite(t.lambda) || t.lambda > 0.0)
            throw DomainError("NegligibleTerm: lambda must be <= 0");
        if (t.log_power < 0)
            throw DomainError("NegligibleTerm: log_power must be >= 0");
        if (t.lambda == 0.0 && t.log_power == 0)
            throw DomainError("NegligibleTerm: (0,0) is the finite part, not a basis member");
    }
}

inline void validate_grid(const EpsilonGrid& g, std::size_t basis_size) {
    if (!(g.eps0 > 0.0) || !(g.eps0 < 0.5))
        throw DomainError("EpsilonGrid: eps0 must lie in (0, 1/2)");
    if (!(g.ratio > 0.0) || !(g.ratio < 1.0))
        throw DomainError("EpsilonGrid: ratio must lie in (0, 1)");
    if (g.count < int(basis_size) + 3)
        throw DomainError("EpsilonGrid: count must be >= basis size + 3");
}

inline long double ipow_l(long double base, int e) {
    if (e < 0) return 1.0L / ipow_l(base, -e);
    long double r = 1.0L, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Chebyshev T_r(x), plus the monomial coefficients of T_r for the exact
// back-transform of fitted coefficients.
inline long double cheb_eval(int r, long double x) {
    if (r == 0) return 1.0L;
    long double tm = 1.0L, tc = x;
    for (int k = 1; k < r; ++k) {
        const long double tn = 2.0L * x * tc - tm;
        tm = tc;
        tc = tn;
    }
    return tc;
}

inline std::vector<std::vector<long double>> cheb_monomial_table(int max_deg) {
    std::vector<std::vector<long double>> c(std::size_t(max_deg) + 1);
    c[0] = {1.0L};
    if (max_deg >= 1) c[1] = {0.0L, 1.0L};
    for (int r = 2; r <= max_deg; ++r) {
        auto& cr = c[std::size_t(r)];
        cr.assign(std::size_t(r) + 1, 0.0L);
        for (std::size_t j = 0; j < c[std::size_t(r - 1)].size(); ++j)
            cr[j + 1] += 2.0L * c[std::size_t(r - 1)][j];
        for (std::size_t j = 0; j < c[std::size_t(r - 2)].size(); ++j)
            cr[j] -= c[std::size_t(r - 2)][j];
    }
    return c;
}

// Column-pivoted Householder QR least squares. A is n x m, column major,
// overwritten. Fills cond with the rank-revealing max|R_kk|/min|R_kk|.
// Extended precision throughout: condition estimates approach the 1e10
// gate, where double rounding would dominate the finite part.
inline std::vector<long double> qr_solve(std::vector<long double>& A, int n, int m,
                                         std::vector<long double>& y, double& cond) {
    auto at = [&](int i, int j) -> long double& { return A[std::size_t(j) * n + i]; };
    std::vector<long double> diag(m);
    std::vector<int> perm(m);
    for (int k = 0; k < m; ++k) perm[std::size_t(k)] = k;

    for (int k = 0; k < m; ++k) {
        // pivot: bring the column with the largest remaining norm to front
        int best = k;
        long double best_norm = -1.0L;
        for (int j = k; j < m; ++j) {
            long double nrm = 0.0L;
            for (int i = k; i < n; ++i) nrm = std::hypot(nrm, at(i, j));
            if (nrm > best_norm) {
                best_norm = nrm;
                best = j;
            }
        }
        if (best != k) {
            for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, best));
            std::swap(perm[std::size_t(k)], perm[std::size_t(best)]);
        }
        if (best_norm == 0.0L) {
            cond = std::numeric_limits<double>::infinity();
            return std::vector<long double>(m, 0.0L);
        }
        const long double alpha = at(k, k) >= 0.0L ? -best_norm : best_norm;
        at(k, k) -= alpha; // Householder vector stored in place of column k
        long double vnorm2 = 0.0L;
        for (int i = k; i < n; ++i) vnorm2 += at(i, k) * at(i, k);
        for (int j = k + 1; j < m; ++j) {
            long double dot = 0.0L;
            for (int i = k; i < n; ++i) dot += at(i, k) * at(i, j);
            const long double beta = 2.0L * dot / vnorm2;
            for (int i = k; i < n; ++i) at(i, j) -= beta * at(i, k);
        }
        long double dot = 0.0L;
        for (int i = k; i < n; ++i) dot += at(i, k) * y[std::size_t(i)];
        const long double beta = 2.0L * dot / vnorm2;
        for (int i = k; i < n; ++i) y[std::size_t(i)] -= beta * at(i, k);
        diag[std::size_t(k)] = alpha;
    }
    long double dmax = 0.0L, dmin = std::numeric_limits<long double>::infinity();
    for (int k = 0; k < m; ++k) {
        dmax = std::max(dmax, std::abs(diag[std::size_t(k)]));
        dmin = std::min(dmin, std::abs(diag[std::size_t(k)]));
    }
    cond = dmin > 0.0L ? std::max(1.0, double(dmax / dmin))
                       : std::numeric_limits<double>::infinity();
    // Back substitution on the R factor (strict upper part survives in A).
    std::vector<long double> xp(m);
    for (int k = m - 1; k >= 0; --k) {
        long double s = y[std::size_t(k)];
        for (int j = k + 1; j < m; ++j) s -= at(k, j) * xp[std::size_t(j)];
        xp[std::size_t(k)] = s / diag[std::size_t(k)];
    }
    std::vector<long double> x(m);
    for (int k = 0; k < m; ++k) x[std::size_t(perm[std::size_t(k)])] = xp[std::size_t(k)];
    return x;
}

// Wynn epsilon-algorithm limit of a sequence that approaches its limit as
// c + lambda^j * poly(j); exact for the convergent neutrix cases here.
inline double wynn_epsilon(const std::vector<long double>& seq, double& change) {
    std::vector<long double> prev(seq.size() + 1, 0.0L);
    std::vector<long double> cur = seq;
    long double best = seq.back();
    change = seq.size() > 1 ? double(std::abs(seq.back() - seq[seq.size() - 2]))
                            : double(std::abs(seq.back()));
    for (int col = 1; cur.size() >= 2; ++col) {
        std::vector<long double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const long double d = cur[i + 1] - cur[i];
            if (d == 0.0L || !std::isfinite(double(d))) return double(best);
            next[i] = prev[i + 1] + 1.0L / d;
        }
        if (col % 2 == 0) {
            const long double cand = next.back();
            if (std::isfinite(double(cand))) {
                change = double(std::abs(cand - best));
                best = cand;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return double(best);
}

} // namespace detail

// Numerical neutrix limit: sample F on the grid, fit
//   F(eps_j) ~ c + sum_t a_t eps_j^{lambda_t} ln^{r_t}(eps_j)
// and return c. An empty basis means F converges in the ordinary sense;
// the limit is then taken by sequence extrapolation.
//
// The solve is a row-weighted (1/(1+|F_j|), so divergent samples carry
// relative rather than absolute noise), column-scaled least squares on a
// log-centered Chebyshev parametrization, by column-pivoted Householder QR.
// Convergent Taylor terms, when supplied, enter as nuisance columns; their
// coefficients are not reported. F may return double or long double; the
// pipeline runs in extended precision either way.
template <class F>
NeutrixFit extract_finite_part(F&& func, const std::vector<NegligibleTerm>& basis,
                               const EpsilonGrid& grid,
                               const std::vector<ConvergentTerm>& taylor = {}) {
    detail::validate_basis(basis);
    detail::validate_grid(grid, basis.size());
    for (const auto& t : taylor)
        if (!(t.power > 0.0) || t.log_power < 0)
            throw DomainError("extract_finite_part: taylor terms need power > 0, log_power >= 0");

    const int n = grid.count;
    std::vector<long double> eps(n), fv(n);
    double e = grid.eps0;
    for (int j = 0; j < n; ++j, e *= grid.ratio) {
        eps[std::size_t(j)] = e;
        fv[std::size_t(j)] = static_cast<long double>(func(e));
        if (!std::isfinite(double(fv[std::size_t(j)])))
            throw DomainError("extract_finite_part: F not finite at a grid point");
    }

    NeutrixFit out;
    if (basis.empty()) {
        double change = 0.0;
        out.finite_part = detail::wynn_epsilon(fv, change);
        out.residual_rms = change;
        out.condition_estimate = 1.0;
        return out;
    }

    int max_log = 0;
    for (const auto& t : basis) max_log = std::max(max_log, t.log_power);
    for (const auto& t : taylor) max_log = std::max(max_log, t.log_power);

    // Model columns after the constant: the basis, the Taylor terms, and
    // per-lambda completions of any gaps in the log degrees. A shifted
    // polynomial in ln(eps) only spans the same space as the monomials when
    // every lower degree is present; completions are nuisance columns and
    // stay unreported.
    std::vector<NegligibleTerm> columns = basis;
    for (const auto& t : taylor) columns.push_back({t.power, t.log_power});
    {
        std::vector<NegligibleTerm> completed;
        for (const auto& col : columns) {
            for (int r = 0; r < col.log_power; ++r) {
                const NegligibleTerm probe{col.lambda, r};
                if (col.lambda == 0.0 && r == 0) continue; // the constant column
                bool present = false;
                for (const auto& c2 : columns)
                    if (c2 == probe) { present = true; break; }
                for (const auto& c2 : completed)
                    if (c2 == probe) { present = true; break; }
                if (!present) completed.push_back(probe);
            }
        }
        columns.insert(columns.end(), completed.begin(), completed.end());
    }

    const int m = int(columns.size()) + 1;
    if (grid.count < m + 2)
        throw DomainError("extract_finite_part: grid count too small for the model columns");

    std::vector<long double> lneps(n);
    long double mu = 0.0L;
    for (int j = 0; j < n; ++j) {
        lneps[std::size_t(j)] = std::log(eps[std::size_t(j)]);
        mu += lneps[std::size_t(j)];
    }
    mu /= n;
    const long double halfspan = 0.5L * (lneps.front() - lneps.back());
    const long double spread = halfspan > 0.0L ? halfspan : 1.0L;

    // Rows weighted by 1/(1+|F_j|): deep divergent samples then carry
    // relative rather than absolute noise, so they separate the eps^lambda
    // groups without drowning the constant, which only shallow rows see.
    std::vector<long double> rowW(n);
    for (int j = 0; j < n; ++j)
        rowW[std::size_t(j)] = 1.0L / (1.0L + std::abs(fv[std::size_t(j)]));

    // Log powers enter as Chebyshev polynomials of tau = (ln eps - mu)/s:
    // same span as the monomials ln^r(eps), far better conditioned.
    std::vector<long double> A(std::size_t(n) * m);
    for (int j = 0; j < n; ++j) A[std::size_t(j)] = rowW[std::size_t(j)]; // constant column
    for (int t = 0; t < int(columns.size()); ++t)
        for (int j = 0; j < n; ++j) {
            const long double tau = (lneps[std::size_t(j)] - mu) / spread;
            A[std::size_t(t + 1) * n + j] =
                rowW[std::size_t(j)] *
                std::pow(eps[std::size_t(j)],
                         static_cast<long double>(columns[std::size_t(t)].lambda)) *
                detail::cheb_eval(columns[std::size_t(t)].log_power, tau);
        }

    // Columns scaled to unit norm; eps^{-2} and eps^{-1} columns differ by
    // orders of magnitude otherwise.
    std::vector<long double> scale(m);
    for (int k = 0; k < m; ++k) {
        long double s = 0.0L;
        for (int j = 0; j < n; ++j) s = std::hypot(s, A[std::size_t(k) * n + j]);
        scale[std::size_t(k)] = s;
        if (s > 0.0L)
            for (int j = 0; j < n; ++j) A[std::size_t(k) * n + j] /= s;
    }

    std::vector<long double> Acopy = A;
    std::vector<long double> rhs(n);
    for (int j = 0; j < n; ++j) rhs[std::size_t(j)] = rowW[std::size_t(j)] * fv[std::size_t(j)];
    double cond = 0.0;
    std::vector<long double> xs = detail::qr_solve(A, n, m, rhs, cond);
    out.condition_estimate = cond;
    if (!(cond <= 1e10)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "extract_finite_part: condition estimate %.2e exceeds 1e10", cond);
        throw IllConditioned(msg);
    }

    std::vector<long double> x(m);
    for (int k = 0; k < m; ++k)
        x[std::size_t(k)] =
            scale[std::size_t(k)] > 0.0L ? xs[std::size_t(k)] / scale[std::size_t(k)] : 0.0L;

    long double rss = 0.0L, fmax = 0.0L;
    for (int j = 0; j < n; ++j) {
        long double pred = 0.0L;
        for (int k = 0; k < m; ++k)
            pred += Acopy[std::size_t(k) * n + j] * xs[std::size_t(k)];
        const long double r = fv[std::size_t(j)] - pred / rowW[std::size_t(j)];
        rss += r * r;
        fmax = std::max(fmax, std::abs(fv[std::size_t(j)]));
    }
    out.residual_rms = double(std::sqrt(rss / n));
    if (out.residual_rms > 1e-6 * double(fmax))
        throw FitRejected("extract_finite_part: residual rms exceeds 1e-6 * max|F|");

    // The finite part is the flat-group polynomial evaluated at ln(eps) = 0,
    // i.e. tau = t0; monomial ln^j coefficients come from the exact
    // Chebyshev-to-monomial and binomial back-transforms.
    const long double t0 = -mu / spread;
    long double c = x[0];
    for (int t = 0; t < int(columns.size()); ++t)
        if (columns[std::size_t(t)].lambda == 0.0)
            c += x[std::size_t(t + 1)] * detail::cheb_eval(columns[std::size_t(t)].log_power, t0);
    out.finite_part = double(c);

    auto binom = [](int a, int b) {
        long double v = 1.0L;
        for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
        return v;
    };
    const auto cheb = detail::cheb_monomial_table(max_log);
    out.coefficients.reserve(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const NegligibleTerm& term = basis[t];
        // coefficient of eps^lambda ln^i with (lambda, i) == term, gathered
        // from every column of the same lambda group:
        //   T_r(tau) = sum_j cheb[r][j] tau^j, and tau^j expands over ln^i.
        const int i = term.log_power;
        long double coeff = 0.0L;
        for (int u = 0; u < int(columns.size()); ++u) {
            const NegligibleTerm& cu = columns[std::size_t(u)];
            if (cu.lambda != term.lambda || cu.log_power < i) continue;
            long double contrib = 0.0L;
            for (int j = i; j <= cu.log_power; ++j)
                contrib += cheb[std::size_t(cu.log_power)][std::size_t(j)] * binom(j, i) *
                           detail::ipow_l(t0, j - i);
            coeff += x[std::size_t(u + 1)] * contrib / detail::ipow_l(spread, i);
        }
        out.coefficients.emplace_back(term, double(coeff));
    }
    return out;
}

// Builds the negligible basis from the integrand's endpoint expansion:
// every (lambda, r) with lambda in powers and r <= max_log, plus the pure
// log terms ln^r(eps) for r = 1..max_log+1.
inline std::vector<NegligibleTerm> basis_for_integrand(const std::vector<double>& powers,
                                                       int max_log) {
    if (max_log < 0) throw DomainError("basis_for_integrand: max_log must be >= 0");
    std::vector<NegligibleTerm> out;
    for (double p : powers) {
        if (!(p < 0.0)) throw DomainError("basis_for_integrand: powers must be negative");
        for (int r = 0; r <= max_log; ++r) out.push_back({p, r});
    }
    for (int r = 1; r <= max_log + 1; ++r) out.push_back({0.0, r});
    std::sort(out.begin(), out.end(), [](const NegligibleTerm& a, const NegligibleTerm& b) {
        return a.lambda != b.lambda ? a.lambda < b.lambda : a.log_power < b.log_power;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Arithmetic ladder of vanishing Taylor terms, first_power + k for
// k = 0..count-1, each with log powers 0..max_log. Matches the remainder
// structure of the exponential-series integrands in this library.
inline std::vector<ConvergentTerm> taylor_ladder(double first_power, int count, int max_log) {
    if (!(first_power > 0.0) || count < 0 || max_log < 0)
        throw DomainError("taylor_ladder: need first_power > 0, count >= 0, max_log >= 0");
    std::vector<ConvergentTerm> out;
    for (int k = 0; k < count; ++k)
        for (int r = 0; r <= max_log; ++r) out.push_back({first_power + k, r});
    return out;
}

// One oracle-vs-closed-form comparison; fit failures become failed reports.
struct VerifyReport {
    std::string name;
    double closed_form = 0.0;
    double fitted = std::numeric_limits<double>::quiet_NaN();
    double abs_diff = std::numeric_limits<double>::quiet_NaN();
    double tol = 0.0;
    bool pass = false;
    double residual_rms = 0.0;
    double condition_estimate = 0.0;
    std::string error;
};

template <class F>
VerifyReport verify_case(const std::string& name, double closed_form, F&& func,
                         const std::vector<NegligibleTerm>& basis, const EpsilonGrid& grid,
                         double tol, const std::vector<ConvergentTerm>& taylor = {}) {
    if (!(tol > 0.0)) throw DomainError("verify_case: tol must be > 0");
    VerifyReport rep;
    rep.name = name;
    rep.closed_form = closed_form;
    rep.tol = tol;
    try {
        const NeutrixFit fit = extract_finite_part(std::forward<F>(func), basis, grid, taylor);
        rep.fitted = fit.finite_part;
        rep.abs_diff = std::abs(fit.finite_part - closed_form);
        rep.residual_rms = fit.residual_rms;
        rep.condition_estimate = fit.condition_estimate;
        rep.pass = rep.abs_diff < tol;
    } catch (const std::exception& ex) {
        rep.error = ex.what();
        rep.pass = false;
    }
    return rep;
}

} // namespace neutrix::fit

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace neutrix {

// How a returned value was produced.
enum class Method {
    series,
    regularized_quadrature,
    recurrence,
    closed_form,
    neutrix_fit
};

inline const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::regularized_quadrature: return "regularized_quadrature";
        case Method::recurrence: return "recurrence";
        case Method::closed_form: return "closed_form";
        case Method::neutrix_fit: return "neutrix_fit";
    }
    return "unknown";
}

// Value plus an absolute error estimate and a work counter
// (series terms summed or quadrature panels evaluated).
struct Evaluation {
    double value = 0.0;
    double abs_err_est = 0.0;
    Method method = Method::closed_form;
    std::int64_t work = 0;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllConditioned : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Neumaier-compensated accumulator. abs() tracks the sum of |terms| so
// callers can bound cancellation-induced rounding in error estimates.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    double abs_terms = 0.0;

    void add(double t) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
        abs_terms += std::abs(t);
    }

    double value() const { return sum + comp; }
    double abs() const { return abs_terms; }
};

// Exact small integer power by repeated multiplication.
inline double ipow(double base, int e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    double r = 1.0;
    double b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// n! as a double; valid for n <= 170.
inline double factorial(int n) {
    if (n < 0 || n > 170) throw DomainError("factorial: n out of range [0,170]");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

} // namespace neutrix

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace levyma {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b].
/// Throws QuadratureError when the error estimate does not converge.
template <typename F>
auto integrate(F&& f, double a, double b, double tol = 1e-12, int max_depth = 13) {
    using R = decltype(f(a));
    if (a == b) return R{};
    double err = 0.0;
    R val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, max_depth, tol, &err);
    if (!(err <= 1e-7 * std::max(1.0, std::abs(val)))) {
        throw QuadratureError("adaptive quadrature did not converge (error estimate " +
                              std::to_string(err) + ")");
    }
    return val;
}

/// Composite Simpson rule on a uniform grid. Odd interval counts are closed
/// with a 3/8 rule on the final three intervals; fewer than two intervals
/// fall back to the trapezoid rule.
template <typename T>
T simpson_uniform(std::span<const T> y, double dx) {
    const std::size_t m = y.size();
    if (m < 2) return T{};
    if (m == 2) return (y[0] + y[1]) * (dx / 2.0);
    std::size_t intervals = m - 1;
    T total{};
    std::size_t stop = intervals;  // one past last node of the Simpson part
    if (intervals % 2 != 0) {
        if (intervals < 3) return (y[0] + y[1]) * (dx / 2.0);
        stop = intervals - 3;
        total += (y[stop] + 3.0 * y[stop + 1] + 3.0 * y[stop + 2] + y[stop + 3]) * (3.0 * dx / 8.0);
    }
    if (stop >= 2) {
        T acc = y[0] + y[stop];
        for (std::size_t i = 1; i < stop; i += 2) acc += 4.0 * y[i];
        for (std::size_t i = 2; i < stop; i += 2) acc += 2.0 * y[i];
        total += acc * (dx / 3.0);
    }
    return total;
}

inline double simpson_uniform(std::span<const double> y, double dx) {
    return simpson_uniform<double>(y, dx);
}

inline std::complex<double> simpson_uniform(std::span<const std::complex<double>> y, double dx) {
    return simpson_uniform<std::complex<double>>(y, dx);
}

}  // namespace levyma

#include "levyma/charfn.hpp"

#include <cmath>

#include "levyma/quad.hpp"

namespace levyma {

namespace {
// Truncation of \int_0^inf psi(u e^{-x}) dx for the exponential kernel:
// the integrand is below 1e-19 * scale past x = 48 for all test triplets.
constexpr double kExpTail = 48.0;
}  // namespace

std::complex<double> big_psi(const LevyTriplet& t, const KernelAlpha& k, double u) {
    if (u == 0.0) return {};
    if (u < 0.0) return std::conj(big_psi(t, k, -u));
    double a = k.alpha();
    if (a > 0.0) {
        double inv_a = 1.0 / a;
        return (2.0 * inv_a) *
               integrate([&](double y) { return t.psi(u * std::pow(y, inv_a)); }, 0.0, 1.0);
    }
    return 2.0 * integrate([&](double x) { return t.psi(u * std::exp(-x)); }, 0.0, kExpTail);
}

std::complex<double> big_psi_direct(const LevyTriplet& t, const KernelAlpha& k, double u) {
    if (u == 0.0) return {};
    if (u < 0.0) return std::conj(big_psi_direct(t, k, -u));
    if (k.alpha() > 0.0) {
        return 2.0 * integrate([&](double s) { return t.psi(u * k(s)); },
                               0.0, k.support_radius());
    }
    // exponential kernel: 2 \int_0^u psi(z)/z dz, the integrand has a finite
    // limit i(gamma + lambda E Y) at zero
    return 2.0 * integrate([&](double z) { return t.psi(z) / z; }, 0.0, u);
}

std::complex<double> big_psi_derivative(const LevyTriplet& t, const KernelAlpha& k, double u) {
    if (std::abs(u) < 1e-8) {
        double slope = 2.0 * (t.gamma + t.jump_mean_rate()) / (1.0 + k.alpha());
        return std::complex<double>(0.0, slope);
    }
    return (2.0 * t.psi(u) - k.alpha() * big_psi(t, k, u)) / u;
}

std::complex<double> phi(const LevyTriplet& t, const KernelAlpha& k, double u) {
    return std::exp(big_psi(t, k, u));
}

std::complex<double> phi_derivative(const LevyTriplet& t, const KernelAlpha& k, double u) {
    return big_psi_derivative(t, k, u) * phi(t, k, u);
}

}  // namespace levyma

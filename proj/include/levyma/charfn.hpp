#pragma once

#include <complex>

#include "levyma/kernel.hpp"
#include "levyma/levy.hpp"

namespace levyma {

/// Log-characteristic function of the stationary moving average,
/// Psi(u) = 2 u^{-alpha} \int_0^u psi(z) z^{alpha-1} dz, evaluated with the
/// z = u y^{1/alpha} substitution that removes the endpoint singularity.
/// Negative arguments follow from Hermitian symmetry.
std::complex<double> big_psi(const LevyTriplet& t, const KernelAlpha& k, double u);

/// Same quantity through the defining representation \int psi(u K(s)) ds.
/// Kept as an independent evaluation route for cross-checks.
std::complex<double> big_psi_direct(const LevyTriplet& t, const KernelAlpha& k, double u);

/// d/du Psi(u) = (2 psi(u) - alpha Psi(u)) / u, with the analytic limit at 0.
std::complex<double> big_psi_derivative(const LevyTriplet& t, const KernelAlpha& k, double u);

/// Characteristic function Phi(u) = exp(Psi(u)).
std::complex<double> phi(const LevyTriplet& t, const KernelAlpha& k, double u);

/// Phi'(u) = Psi'(u) Phi(u).
std::complex<double> phi_derivative(const LevyTriplet& t, const KernelAlpha& k, double u);

}  // namespace levyma

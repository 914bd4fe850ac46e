#pragma once

#include <vector>

#include "levyma/spectral.hpp"
#include "levyma/weights.hpp"

namespace levyma {

/// Joint result of the three spectral estimators. Cutoffs record the values
/// actually integrated over, after any clamping to x0n.
struct EstimationResult {
    double sigma2_hat = 0.0;
    double lambda_hat = 0.0;
    double gamma_hat = 0.0;
    double u_sigma = 0.0;
    double u_lambda = 0.0;
    double u_gamma = 0.0;
    double x0n = 0.0;
    bool truncated = false;  // set when any requested cutoff exceeded x0n
};

/// sigma_n^2 = \int w_sigma^U(u) Re psi_n(u) du by composite Simpson on the
/// psi grid. A cutoff beyond x0n is clamped to x0n with the weight family
/// rebuilt (constraints renormalized) on the clamped range; `truncated` is
/// set when that happens. `used_cutoff` reports the effective U.
double estimate_sigma2(const PsiEstimate& psi, const WeightFamily& w,
                       bool* truncated = nullptr, double* used_cutoff = nullptr);
/// lambda_n = \int w_lambda^U(u) Re psi_n(u) du, same conventions.
double estimate_lambda(const PsiEstimate& psi, const WeightFamily& w,
                       bool* truncated = nullptr, double* used_cutoff = nullptr);
/// gamma_n = \int w_gamma^U(u) Im psi_n(u) du, same conventions.
double estimate_gamma(const PsiEstimate& psi, const WeightFamily& w,
                      bool* truncated = nullptr, double* used_cutoff = nullptr);

/// All three estimators, each at its own cutoff (same base weight).
EstimationResult estimate_all(const PsiEstimate& psi, const BaseWeight& base,
                              double u_sigma, double u_lambda, double u_gamma);

/// Flat-top spectral weight: identically 1 on [-1/2, 1/2], infinitely smooth
/// decay to 0 at |u| = 1, zero outside [-1, 1]. Used as the default
/// regularizer w_nu of the density estimator.
double flat_top_weight(double u);

struct DensityEstimate {
    std::vector<double> x;
    std::vector<double> nu;
    double cutoff = 0.0;           // effective U of the inversion
    double mass = 0.0;             // \int nu_n over the x grid (Simpson)
    double max_imag_residual = 0.0;
    bool truncated = false;
};

/// nu_n(x) = (2 pi)^{-1} \int_{-U}^{U} e^{-iux} (psi_n(u) + sigma2 u^2/2
/// - i gamma u + lambda) w_nu(u/U) du, by direct quadrature over the psi grid
/// extended to negative u through conjugation. The imaginary part of the
/// quadrature is tracked as a symmetry check and the real part returned.
DensityEstimate estimate_levy_density(const PsiEstimate& psi, const EstimationResult& est,
                                      const std::vector<double>& x_grid, double cutoff);

/// Default inversion grid: uniform, symmetric about 0.
std::vector<double> make_x_grid(double x_max = 30.0, std::size_t points = 1201);

}  // namespace levyma

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "levyma/charfn.hpp"
#include "levyma/simulate.hpp"

namespace levyma {

/// Empirical characteristic function and its exact derivative on a uniform
/// frequency grid starting at 0.
struct EcfGrid {
    std::vector<double> u;
    std::vector<std::complex<double>> phi;   // Phi_n(u)
    std::vector<std::complex<double>> dphi;  // Phi_n'(u), exact data sum
    std::size_t n_obs = 0;

    double du() const { return u.size() > 1 ? u[1] - u[0] : 0.0; }
};

/// Uniform grid 0, du, ..., covering [0, 1.2 * u_max] with
/// du = min(0.01, u_max / 800).
std::vector<double> make_u_grid(double u_max);

/// Magnitude floor below which |Phi_n| is treated as noise: 2/sqrt(n).
double default_ecf_floor(std::size_t n_obs);

/// Phi_n(u) = (1/n) sum exp(i u Z_j) and its derivative in one pass over the
/// data, using incremental rotations per observation.
EcfGrid ecf_eval(std::span<const double> values, std::vector<double> u_grid);
EcfGrid ecf_eval(const SamplePath& path, std::vector<double> u_grid);

/// Exact characteristic function of the model on a grid, with the analytic
/// derivative. Stands in for EcfGrid in oracle tests; n_obs = 0.
EcfGrid analytic_ecf(const LevyTriplet& t, const KernelAlpha& k, std::vector<double> u_grid);

/// Smallest grid point where |Phi_n| drops below `floor`, or the grid upper
/// end if it never does.
double first_zero_detect(const EcfGrid& ecf, double floor);

/// Plug-in estimate of the characteristic exponent on [0, x0n) with the
/// continuous branch of the complex logarithm.
struct PsiEstimate {
    std::vector<double> u;
    std::vector<std::complex<double>> psi;
    std::vector<std::int32_t> branch;   // winding count of log Phi_n per node
    std::vector<std::uint8_t> valid;    // 0 beyond the first-zero cutoff
    double x0n = 0.0;
    double alpha = 0.0;
    std::size_t n_obs = 0;

    double du() const { return u.size() > 1 ? u[1] - u[0] : 0.0; }
};

/// psi_n(u) = (alpha log Phi_n(u) + u Phi_n'(u)/Phi_n(u)) / 2 with cumulative
/// phase unwrapping from psi_n(0) = 0. `floor` defaults to 2/sqrt(n_obs)
/// (or 0 for analytic input). Throws std::runtime_error when the grid is too
/// coarse to unwrap (adjacent phase jump at the pi boundary).
PsiEstimate psi_n_eval(const EcfGrid& ecf, const KernelAlpha& k,
                       std::optional<double> floor = std::nullopt);

}  // namespace levyma

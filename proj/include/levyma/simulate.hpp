#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "levyma/kernel.hpp"
#include "levyma/levy.hpp"

namespace levyma {

/// Configuration for exact simulation on an equidistant grid.
struct SimConfig {
    LevyTriplet triplet;
    KernelAlpha kernel{0.5};
    double delta = 1.0;      // grid step
    std::size_t n = 1000;    // number of observations
    std::uint64_t seed = 1;
    double t_start = 0.0;    // observations at t_start + delta, ..., t_start + n*delta
    bool record_jumps = false;

    void validate() const;

    /// Radius beyond which jumps cannot influence any observation: the kernel
    /// support radius, truncated at 40 for the exponential kernel
    /// (exp(-40) < 1e-17).
    double jump_window_radius() const;
};

struct SamplePath {
    std::vector<double> times;
    std::vector<double> values;
    SimConfig config;
    std::vector<std::pair<double, double>> jump_record;  // (time, size), optional
};

/// Symmetric banded matrix, stored by diagonals: entry(i, i+b) for
/// 0 <= b <= bandwidth.
class BandSymMatrix {
public:
    BandSymMatrix(std::size_t n, std::size_t bandwidth)
        : n_(n), bw_(bandwidth), d_((bandwidth + 1) * n, 0.0) {}

    std::size_t size() const { return n_; }
    std::size_t bandwidth() const { return bw_; }

    double operator()(std::size_t i, std::size_t j) const {
        std::size_t lo = i < j ? i : j, hi = i < j ? j : i;
        if (hi - lo > bw_) return 0.0;
        return d_[(hi - lo) * n_ + lo];
    }
    double& at_band(std::size_t band, std::size_t i) { return d_[band * n_ + i]; }
    double at_band(std::size_t band, std::size_t i) const { return d_[band * n_ + i]; }

private:
    std::size_t n_, bw_;
    std::vector<double> d_;
};

/// Covariance of the Gaussian component on the observation grid:
/// entries sigma^2 * rho(|i-j| delta), banded with bandwidth ceil(2/(alpha delta)).
BandSymMatrix gaussian_grid_cov(const SimConfig& cfg);

/// Lower-triangular banded Cholesky factor; retries once with 1e-12 jitter on
/// the diagonal, then throws std::runtime_error.
BandSymMatrix banded_cholesky(const BandSymMatrix& c);

/// Exact path simulation: drift plateau gamma * \int K, compound Poisson
/// jumps smoothed by the kernel from one homogeneous Poisson point process on
/// the widened window, plus (when sigma > 0) a Gaussian vector with the exact
/// grid covariance. Deterministic given (config, seed).
SamplePath simulate_path(const SimConfig& cfg);

}  // namespace levyma

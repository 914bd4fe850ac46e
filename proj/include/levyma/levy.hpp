#pragma once

#include <complex>
#include <vector>

#include "levyma/rng.hpp"

namespace levyma {

/// Jump-size law of the compound Poisson component. Gaussian and Laplace
/// variants carry closed-form characteristic functions; a tabulated variant
/// treats the samples as a piecewise-linear density with exact per-segment
/// integrals.
class JumpDensity {
public:
    enum class Kind { Gaussian, Laplace, Tabulated };

    static JumpDensity gaussian(double mean, double variance);
    static JumpDensity laplace(double scale);
    static JumpDensity tabulated(std::vector<double> x, std::vector<double> p);

    Kind kind() const { return kind_; }
    double gauss_mean() const { return a_; }
    double gauss_variance() const { return b_; }
    double laplace_scale() const { return a_; }
    const std::vector<double>& grid() const { return x_; }
    const std::vector<double>& density_values() const { return p_; }

    /// Characteristic function E[exp(i u Y)].
    std::complex<double> cf(double u) const;
    std::complex<double> cf(std::complex<double> u) const;

    double mean() const;
    double second_moment() const;

    /// Density value at x (piecewise-linear interpolation for tabulated).
    double pdf(double x) const;

    double sample(Rng& rng) const;

private:
    JumpDensity() = default;

    Kind kind_ = Kind::Gaussian;
    double a_ = 0.0;  // mean (Gaussian) or scale (Laplace)
    double b_ = 1.0;  // variance (Gaussian)
    std::vector<double> x_, p_;    // tabulated knots
    std::vector<double> cdf_;      // cumulative mass at knots, for sampling
};

/// Levy triplet (gamma, sigma, lambda) with compound Poisson jumps of law
/// `jumps`. Defines the characteristic exponent psi.
struct LevyTriplet {
    double gamma = 0.0;
    double sigma = 0.0;
    double lambda = 0.0;
    JumpDensity jumps = JumpDensity::gaussian(0.0, 1.0);

    LevyTriplet() = default;
    LevyTriplet(double gamma_, double sigma_, double lambda_,
                JumpDensity jumps_ = JumpDensity::gaussian(0.0, 1.0));

    /// psi(u) = i gamma u - sigma^2 u^2 / 2 - lambda + lambda cf_Y(u)
    std::complex<double> psi(double u) const;
    std::complex<double> psi(std::complex<double> u) const;
    std::vector<std::complex<double>> psi(const std::vector<double>& u) const;

    /// Mean of the jump part per unit intensity, lambda * E[Y].
    double jump_mean_rate() const { return lambda * jumps.mean(); }
    /// \int x^2 nu(dx) = lambda * E[Y^2].
    double jump_second_moment_rate() const { return lambda * jumps.second_moment(); }
};

}  // namespace levyma

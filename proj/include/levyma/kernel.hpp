#pragma once

#include <limits>

namespace levyma {

/// The one-parameter kernel family K_alpha(x) = (1 - alpha|x|)^(1/alpha) on
/// |x| <= 1/alpha, with the exponential kernel exp(-|x|) as the alpha -> 0
/// limit. alpha must lie in [0, 1).
class KernelAlpha {
public:
    explicit KernelAlpha(double alpha);

    double alpha() const { return alpha_; }

    /// Kernel value at x.
    double operator()(double x) const;

    /// Radius of the support: 1/alpha, or +inf for the exponential kernel.
    double support_radius() const {
        return alpha_ > 0.0 ? 1.0 / alpha_ : std::numeric_limits<double>::infinity();
    }

    /// Total mass \int K = 2/(1+alpha) (holds for alpha = 0 as well).
    double integral() const { return 2.0 / (1.0 + alpha_); }

    /// Overlap autocorrelation rho(h) = \int K(x) K(x+h) dx, by adaptive
    /// quadrature over the pieces between kink points. Exactly zero for
    /// |h| > 2/alpha when alpha > 0; symmetric in h.
    double autocorr(double h) const;

private:
    double alpha_;
};

}  // namespace levyma

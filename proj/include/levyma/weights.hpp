#pragma once

#include <array>

namespace levyma {

/// Base weight on the unit interval: a polynomial bump (v - eps)^2 (1 - v)^2
/// supported on [eps, 1], vanishing at both endpoints. Moments are available
/// in closed form.
struct BaseWeight {
    double epsilon = 0.05;

    explicit BaseWeight(double eps = 0.05);

    double operator()(double v) const;

    /// m_k = \int_eps^1 w(s) s^k ds for k = 0..4, exact.
    std::array<double, 5> moments() const;
};

/// One member of the estimating family: base(u/U) * (c0 + c1 v + c2 v^2) / U^p
/// with v = u/U. Supported on [eps U, U].
struct EstimatingWeight {
    BaseWeight base;
    double cutoff = 1.0;
    std::array<double, 3> coeff{};  // c0, c1, c2 in v = u/U
    int scale_pow = 1;

    double operator()(double u) const;
};

/// The three estimating weights sharing a base and cutoff U, normalized so
/// that (in terms of moments over [0, U]):
///   sigma:  \int (-u^2/2) w = 1,  \int w       = 0
///   lambda: \int (-1)     w = 1,  \int (-u^2/2) w = 0
///   gamma:  \int u        w = 1
/// Each scales as w^U(u) = U^{-p} w^1(u/U) with p = 3, 1, 2 respectively.
class WeightFamily {
public:
    WeightFamily(BaseWeight base, double cutoff);

    double cutoff() const { return cutoff_; }
    const BaseWeight& base() const { return base_; }
    /// Cached base moments m_0, m_2, m_4 (of the unit-interval base).
    std::array<double, 3> cached_moments() const { return {m0_, m2_, m4_}; }

    const EstimatingWeight& sigma() const { return sigma_; }
    const EstimatingWeight& lambda() const { return lambda_; }
    const EstimatingWeight& gamma() const { return gamma_; }

    /// Rescaled base weight (1/U) w((u/U)).
    double base_scaled(double u) const { return base_(u / cutoff_) / cutoff_; }

    /// Same family at a different cutoff (used when clamping to x0n).
    WeightFamily with_cutoff(double cutoff) const { return WeightFamily(base_, cutoff); }

private:
    BaseWeight base_;
    double cutoff_;
    double m0_, m2_, m4_;
    EstimatingWeight sigma_, lambda_, gamma_;
};

/// Individual constructors matching the WeightFamily members.
EstimatingWeight build_sigma_weight(const BaseWeight& base, double cutoff);
EstimatingWeight build_lambda_weight(const BaseWeight& base, double cutoff);
EstimatingWeight build_gamma_weight(const BaseWeight& base, double cutoff);

}  // namespace levyma

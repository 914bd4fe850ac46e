#include "levyma/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyma {

namespace {

constexpr double kNormTol = 1e-8;

// \int_0^d (p0 + s t) e^{i u (x0 + t)} dt for a linear density segment.
std::complex<double> segment_cf(double x0, double d, double p0, double p1,
                                std::complex<double> iu) {
    std::complex<double> s((p1 - p0) / d, 0.0);
    std::complex<double> e0, e1;
    if (std::abs(iu) * d < 1e-5) {
        // series in iu*d, enough terms for 1e-16 at the threshold
        std::complex<double> w = iu * d;
        e0 = d * (1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0);
        e1 = d * d * (0.5 + w / 3.0 + w * w / 8.0 + w * w * w / 30.0);
    } else {
        std::complex<double> ew = std::exp(iu * d);
        e0 = (ew - 1.0) / iu;
        e1 = (d * ew - e0) / iu;
    }
    return std::exp(iu * x0) * (p0 * e0 + s * e1);
}

}  // namespace

JumpDensity JumpDensity::gaussian(double mean, double variance) {
    if (!(variance > 0.0)) throw std::invalid_argument("Gaussian jump variance must be positive");
    JumpDensity j;
    j.kind_ = Kind::Gaussian;
    j.a_ = mean;
    j.b_ = variance;
    return j;
}

JumpDensity JumpDensity::laplace(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("Laplace jump scale must be positive");
    JumpDensity j;
    j.kind_ = Kind::Laplace;
    j.a_ = scale;
    return j;
}

JumpDensity JumpDensity::tabulated(std::vector<double> x, std::vector<double> p) {
    if (x.size() < 2 || x.size() != p.size()) {
        throw std::invalid_argument("tabulated jump density needs matching grids with >= 2 knots");
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (!(x[i + 1] > x[i])) throw std::invalid_argument("tabulated grid must be increasing");
    }
    for (double v : p) {
        if (!(v >= 0.0)) throw std::invalid_argument("tabulated density must be nonnegative");
    }
    JumpDensity j;
    j.kind_ = Kind::Tabulated;
    j.x_ = std::move(x);
    j.p_ = std::move(p);
    j.cdf_.assign(j.x_.size(), 0.0);
    for (std::size_t i = 1; i < j.x_.size(); ++i) {
        double d = j.x_[i] - j.x_[i - 1];
        j.cdf_[i] = j.cdf_[i - 1] + 0.5 * (j.p_[i] + j.p_[i - 1]) * d;
    }
    if (std::abs(j.cdf_.back() - 1.0) > kNormTol) {
        throw std::invalid_argument("tabulated jump density must integrate to 1");
    }
    return j;
}

std::complex<double> JumpDensity::cf(double u) const {
    return cf(std::complex<double>(u, 0.0));
}

std::complex<double> JumpDensity::cf(std::complex<double> u) const {
    switch (kind_) {
        case Kind::Gaussian:
            return std::exp(std::complex<double>(0, 1) * u * a_ - 0.5 * b_ * u * u);
        case Kind::Laplace:
            return 1.0 / (1.0 + a_ * a_ * u * u);
        case Kind::Tabulated: {
            std::complex<double> iu = std::complex<double>(0, 1) * u;
            std::complex<double> acc{};
            for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
                acc += segment_cf(x_[i], x_[i + 1] - x_[i], p_[i], p_[i + 1], iu);
            }
            return acc;
        }
    }
    return {};
}

double JumpDensity::mean() const {
    switch (kind_) {
        case Kind::Gaussian: return a_;
        case Kind::Laplace: return 0.0;
        case Kind::Tabulated: {
            // exact first moment of the piecewise-linear density
            double m = 0.0;
            for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
                double d = x_[i + 1] - x_[i];
                m += d * (x_[i] * (2.0 * p_[i] + p_[i + 1]) + x_[i + 1] * (p_[i] + 2.0 * p_[i + 1])) / 6.0;
            }
            return m;
        }
    }
    return 0.0;
}

double JumpDensity::second_moment() const {
    switch (kind_) {
        case Kind::Gaussian: return b_ + a_ * a_;
        case Kind::Laplace: return 2.0 * a_ * a_;
        case Kind::Tabulated: {
            // \int x^2 (p0 + s(x-x0)) dx per segment, exact
            double m = 0.0;
            for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
                double x0 = x_[i], x1 = x_[i + 1], d = x1 - x0;
                double s = (p_[i + 1] - p_[i]) / d;
                double c = p_[i] - s * x0;
                m += c * (x1 * x1 * x1 - x0 * x0 * x0) / 3.0 +
                     s * (x1 * x1 * x1 * x1 - x0 * x0 * x0 * x0) / 4.0;
            }
            return m;
        }
    }
    return 0.0;
}

double JumpDensity::pdf(double x) const {
    switch (kind_) {
        case Kind::Gaussian:
            return std::exp(-(x - a_) * (x - a_) / (2.0 * b_)) / std::sqrt(2.0 * M_PI * b_);
        case Kind::Laplace:
            return std::exp(-std::abs(x) / a_) / (2.0 * a_);
        case Kind::Tabulated: {
            if (x <= x_.front() || x >= x_.back()) return 0.0;
            auto it = std::upper_bound(x_.begin(), x_.end(), x);
            std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
            double w = (x - x_[i]) / (x_[i + 1] - x_[i]);
            return p_[i] * (1.0 - w) + p_[i + 1] * w;
        }
    }
    return 0.0;
}

double JumpDensity::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::Gaussian:
            return a_ + std::sqrt(b_) * rng.normal();
        case Kind::Laplace: {
            double u = rng.uniform01() - 0.5;
            double sign = u < 0.0 ? -1.0 : 1.0;
            return -sign * a_ * std::log(1.0 - 2.0 * std::abs(u));
        }
        case Kind::Tabulated: {
            double target = rng.uniform01() * cdf_.back();
            auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
            std::size_t i = std::min<std::size_t>(
                static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
            if (i == 0) return x_.front();
            --i;
            // invert the quadratic CDF piece F(t) = cdf_i + p_i t + s t^2 / 2
            double d = x_[i + 1] - x_[i];
            double s = (p_[i + 1] - p_[i]) / d;
            double rem = target - cdf_[i];
            double t;
            if (std::abs(s) * d * d < 1e-14) {
                t = p_[i] > 0.0 ? rem / p_[i] : 0.5 * d;
            } else {
                double disc = p_[i] * p_[i] + 2.0 * s * rem;
                t = (-p_[i] + std::sqrt(std::max(disc, 0.0))) / s;
            }
            return x_[i] + std::clamp(t, 0.0, d);
        }
    }
    return 0.0;
}

LevyTriplet::LevyTriplet(double gamma_, double sigma_, double lambda_, JumpDensity jumps_)
    : gamma(gamma_), sigma(sigma_), lambda(lambda_), jumps(std::move(jumps_)) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
}

std::complex<double> LevyTriplet::psi(double u) const {
    std::complex<double> v(-0.5 * sigma * sigma * u * u - lambda, gamma * u);
    if (lambda > 0.0) v += lambda * jumps.cf(u);
    return v;
}

std::complex<double> LevyTriplet::psi(std::complex<double> u) const {
    std::complex<double> v = std::complex<double>(0, 1) * gamma * u -
                             0.5 * sigma * sigma * u * u - lambda;
    if (lambda > 0.0) v += lambda * jumps.cf(u);
    return v;
}

std::vector<std::complex<double>> LevyTriplet::psi(const std::vector<double>& u) const {
    std::vector<std::complex<double>> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = psi(u[i]);
    return out;
}

}  // namespace levyma

#include "levyma/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace levyma {

BaseWeight::BaseWeight(double eps) : epsilon(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("base weight epsilon must lie in (0, 1)");
    }
}

double BaseWeight::operator()(double v) const {
    if (v < epsilon || v > 1.0) return 0.0;
    double a = v - epsilon, b = 1.0 - v;
    return a * a * b * b;
}

std::array<double, 5> BaseWeight::moments() const {
    const double e = epsilon;
    // coefficients of (v - e)^2 (1 - v)^2 in ascending powers of v
    const std::array<double, 5> c{e * e, -2.0 * e * (1.0 + e) , 1.0 + 4.0 * e + e * e,
                                  -2.0 * (1.0 + e), 1.0};
    std::array<double, 5> m{};
    for (int k = 0; k <= 4; ++k) {
        double s = 0.0;
        for (int j = 0; j <= 4; ++j) {
            int p = j + k + 1;
            s += c[static_cast<std::size_t>(j)] * (1.0 - std::pow(e, p)) / p;
        }
        m[static_cast<std::size_t>(k)] = s;
    }
    return m;
}

double EstimatingWeight::operator()(double u) const {
    double v = u / cutoff;
    double b = base(v);
    if (b == 0.0) return 0.0;
    return b * (coeff[0] + coeff[1] * v + coeff[2] * v * v) *
           std::pow(cutoff, -scale_pow);
}

namespace {

void check_cutoff(double cutoff) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("weight cutoff must be positive");
}

// denominator of the joint (sigma^2, lambda) normal equations
double discriminant(double m0, double m2, double m4) {
    double d = m2 * m2 - m4 * m0;
    if (std::abs(d) < 1e-14 * (m2 * m2 + m4 * m0)) {
        throw std::invalid_argument("degenerate base weight: constraint system is singular");
    }
    return d;
}

}  // namespace

EstimatingWeight build_sigma_weight(const BaseWeight& base, double cutoff) {
    check_cutoff(cutoff);
    auto m = base.moments();
    double d = discriminant(m[0], m[2], m[4]);
    return {base, cutoff, {-2.0 * m[2] / d, 0.0, 2.0 * m[0] / d}, 3};
}

EstimatingWeight build_lambda_weight(const BaseWeight& base, double cutoff) {
    check_cutoff(cutoff);
    auto m = base.moments();
    double d = discriminant(m[0], m[2], m[4]);
    // lambda row of the same 2x2 system: \int w = -1, \int u^2 w = 0
    return {base, cutoff, {m[4] / d, 0.0, -m[2] / d}, 1};
}

EstimatingWeight build_gamma_weight(const BaseWeight& base, double cutoff) {
    check_cutoff(cutoff);
    auto m = base.moments();
    if (!(m[2] > 0.0)) throw std::invalid_argument("degenerate base weight: zero second moment");
    return {base, cutoff, {0.0, 1.0 / m[2], 0.0}, 2};
}

WeightFamily::WeightFamily(BaseWeight base, double cutoff)
    : base_(base),
      cutoff_(cutoff),
      sigma_(build_sigma_weight(base, cutoff)),
      lambda_(build_lambda_weight(base, cutoff)),
      gamma_(build_gamma_weight(base, cutoff)) {
    auto m = base.moments();
    m0_ = m[0];
    m2_ = m[2];
    m4_ = m[4];
}

}  // namespace levyma

#include "levyma/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "levyma/quad.hpp"

namespace levyma {

namespace {
// Integration window for the exponential kernel: exp(-45) is far below
// double-precision resolution of the overlap integrals.
constexpr double kExpWindow = 45.0;
}  // namespace

KernelAlpha::KernelAlpha(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("kernel shape alpha must lie in [0, 1)");
    }
}

double KernelAlpha::operator()(double x) const {
    double ax = std::abs(x);
    if (alpha_ == 0.0) return std::exp(-ax);
    double t = 1.0 - alpha_ * ax;
    if (t <= 0.0) return 0.0;
    return std::pow(t, 1.0 / alpha_);
}

double KernelAlpha::autocorr(double h) const {
    h = std::abs(h);
    double lo, hi;
    if (alpha_ > 0.0) {
        double r = support_radius();
        if (h > 2.0 * r) return 0.0;
        lo = -r;
        hi = r - h;
        if (hi <= lo) return 0.0;
    } else {
        lo = -kExpWindow - h;
        hi = kExpWindow;
    }
    // split the range at the kinks of K(x) and K(x+h)
    std::vector<double> pts{lo, hi};
    for (double b : {0.0, -h}) {
        if (b > lo && b < hi) pts.push_back(b);
    }
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        sum += integrate([&](double x) { return (*this)(x) * (*this)(x + h); },
                         pts[i], pts[i + 1]);
    }
    return sum;
}

}  // namespace levyma

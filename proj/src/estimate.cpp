#include "levyma/estimate.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "levyma/quad.hpp"

namespace levyma {

namespace {

// Integrate weight(u) * part(psi_n(u)) over the valid prefix of the psi grid.
// The weight vanishes outside [eps U, U], so integrating over the prefix up
// to the first node past U adds exact zeros only.
template <typename Part>
double integrate_against(const PsiEstimate& psi, const EstimatingWeight& w, Part part) {
    const double du = psi.du();
    std::size_t last = 0;
    while (last + 1 < psi.u.size() && psi.valid[last + 1] && psi.u[last] < w.cutoff) {
        ++last;
    }
    std::vector<double> y(last + 1);
    for (std::size_t i = 0; i <= last; ++i) y[i] = w(psi.u[i]) * part(psi.psi[i]);
    return simpson_uniform(std::span<const double>(y), du);
}

// Clamp the family cutoff to x0n when needed; rebuilds so the moment
// constraints hold on the clamped range.
WeightFamily effective_family(const PsiEstimate& psi, const WeightFamily& w, bool* truncated) {
    if (w.cutoff() <= psi.x0n) {
        if (truncated) *truncated = false;
        return w;
    }
    if (truncated) *truncated = true;
    return w.with_cutoff(psi.x0n);
}

double run_estimator(const PsiEstimate& psi, const WeightFamily& w,
                     const EstimatingWeight& (WeightFamily::*member)() const,
                     double (*part)(const std::complex<double>&),
                     bool* truncated, double* used_cutoff) {
    if (psi.u.empty()) throw std::invalid_argument("empty psi estimate");
    WeightFamily fam = effective_family(psi, w, truncated);
    if (used_cutoff) *used_cutoff = fam.cutoff();
    return integrate_against(psi, (fam.*member)(),
                             [part](const std::complex<double>& z) { return part(z); });
}

double re_part(const std::complex<double>& z) { return z.real(); }
double im_part(const std::complex<double>& z) { return z.imag(); }

}  // namespace

double estimate_sigma2(const PsiEstimate& psi, const WeightFamily& w,
                       bool* truncated, double* used_cutoff) {
    return run_estimator(psi, w, &WeightFamily::sigma, re_part, truncated, used_cutoff);
}

double estimate_lambda(const PsiEstimate& psi, const WeightFamily& w,
                       bool* truncated, double* used_cutoff) {
    return run_estimator(psi, w, &WeightFamily::lambda, re_part, truncated, used_cutoff);
}

double estimate_gamma(const PsiEstimate& psi, const WeightFamily& w,
                      bool* truncated, double* used_cutoff) {
    return run_estimator(psi, w, &WeightFamily::gamma, im_part, truncated, used_cutoff);
}

EstimationResult estimate_all(const PsiEstimate& psi, const BaseWeight& base,
                              double u_sigma, double u_lambda, double u_gamma) {
    EstimationResult res;
    res.x0n = psi.x0n;
    bool trunc = false;
    res.sigma2_hat = estimate_sigma2(psi, WeightFamily(base, u_sigma), &trunc, &res.u_sigma);
    res.truncated |= trunc;
    res.lambda_hat = estimate_lambda(psi, WeightFamily(base, u_lambda), &trunc, &res.u_lambda);
    res.truncated |= trunc;
    res.gamma_hat = estimate_gamma(psi, WeightFamily(base, u_gamma), &trunc, &res.u_gamma);
    res.truncated |= trunc;
    return res;
}

double flat_top_weight(double u) {
    double v = 2.0 * std::abs(u);
    if (v <= 1.0) return 1.0;
    if (v >= 2.0) return 0.0;
    return std::exp(-std::exp(-1.0 / (v - 1.0)) / (2.0 - v));
}

std::vector<double> make_x_grid(double x_max, std::size_t points) {
    if (points < 2 || !(x_max > 0.0)) throw std::invalid_argument("invalid density grid");
    std::vector<double> x(points);
    double step = 2.0 * x_max / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) x[i] = -x_max + step * static_cast<double>(i);
    return x;
}

DensityEstimate estimate_levy_density(const PsiEstimate& psi, const EstimationResult& est,
                                      const std::vector<double>& x_grid, double cutoff) {
    if (x_grid.size() < 2) throw std::invalid_argument("density grid needs >= 2 points");
    if (!(cutoff > 0.0)) throw std::invalid_argument("density cutoff must be positive");

    DensityEstimate out;
    out.truncated = cutoff > psi.x0n;
    const double u_eff = std::min(cutoff, psi.x0n);
    out.cutoff = u_eff;
    out.x = x_grid;

    // remainder h(u) = (psi_n + sigma2 u^2/2 - i gamma u + lambda) w_nu(u/U)
    // sampled on the valid grid prefix, then mirrored by conjugation
    std::size_t m = 0;
    while (m + 1 < psi.u.size() && psi.valid[m + 1] && psi.u[m + 1] <= u_eff + 1e-12) ++m;
    const double du = psi.du();
    std::vector<std::complex<double>> h(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        double u = psi.u[i];
        std::complex<double> rem = psi.psi[i] +
                                   std::complex<double>(0.5 * est.sigma2_hat * u * u + est.lambda_hat,
                                                        -est.gamma_hat * u);
        h[i] = rem * flat_top_weight(u / u_eff);
    }

    const std::size_t full = 2 * m + 1;  // grid -u_m .. u_m, even interval count
    std::vector<std::complex<double>> hv(full), integrand(full);
    std::vector<double> uv(full);
    for (std::size_t i = 0; i < full; ++i) {
        if (i < m) {
            uv[i] = -psi.u[m - i];
            hv[i] = std::conj(h[m - i]);
        } else {
            uv[i] = psi.u[i - m];
            hv[i] = h[i - m];
        }
    }

    out.nu.resize(x_grid.size());
    double max_imag = 0.0;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < x_grid.size(); ++j) {
        const double x = x_grid[j];
        // e^{-iux} along the u grid by incremental rotation
        std::complex<double> c = std::polar(1.0, -uv[0] * x);
        const std::complex<double> w = std::polar(1.0, -du * x);
        for (std::size_t i = 0; i < full; ++i) {
            integrand[i] = hv[i] * c;
            c *= w;
        }
        std::complex<double> val =
            simpson_uniform(std::span<const std::complex<double>>(integrand), du) / two_pi;
        out.nu[j] = val.real();
        max_imag = std::max(max_imag, std::abs(val.imag()));
    }
    out.max_imag_residual = max_imag;
    out.mass = simpson_uniform(std::span<const double>(out.nu), x_grid[1] - x_grid[0]);
    return out;
}

}  // namespace levyma

#include "levyma/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace levyma {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> make_u_grid(double u_max) {
    if (!(u_max > 0.0)) throw std::invalid_argument("u_max must be positive");
    double du = std::min(0.01, u_max / 800.0);
    auto count = static_cast<std::size_t>(std::ceil(1.2 * u_max / du)) + 1;
    std::vector<double> u(count);
    for (std::size_t i = 0; i < count; ++i) u[i] = static_cast<double>(i) * du;
    return u;
}

double default_ecf_floor(std::size_t n_obs) {
    return n_obs > 0 ? 2.0 / std::sqrt(static_cast<double>(n_obs)) : 0.0;
}

EcfGrid ecf_eval(std::span<const double> values, std::vector<double> u_grid) {
    if (values.empty()) throw std::invalid_argument("ecf needs at least one observation");
    if (u_grid.empty()) throw std::invalid_argument("ecf needs a nonempty grid");
    const std::size_t m = u_grid.size();
    const double u0 = u_grid[0];
    const double du = m > 1 ? u_grid[1] - u_grid[0] : 0.0;

    EcfGrid out;
    out.u = std::move(u_grid);
    out.n_obs = values.size();
    std::vector<std::complex<double>> acc(m), zacc(m);
    for (double z : values) {
        // e^{i u z} along the grid by one rotation per step
        std::complex<double> c = u0 == 0.0 ? std::complex<double>(1.0, 0.0)
                                           : std::polar(1.0, u0 * z);
        const std::complex<double> w = std::polar(1.0, du * z);
        for (std::size_t k = 0; k < m; ++k) {
            acc[k] += c;
            zacc[k] += z * c;
            c *= w;
        }
    }
    const double inv_n = 1.0 / static_cast<double>(values.size());
    out.phi.resize(m);
    out.dphi.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        out.phi[k] = acc[k] * inv_n;
        out.dphi[k] = std::complex<double>(0.0, 1.0) * zacc[k] * inv_n;
    }
    return out;
}

EcfGrid ecf_eval(const SamplePath& path, std::vector<double> u_grid) {
    return ecf_eval(std::span<const double>(path.values), std::move(u_grid));
}

EcfGrid analytic_ecf(const LevyTriplet& t, const KernelAlpha& k, std::vector<double> u_grid) {
    EcfGrid out;
    out.u = std::move(u_grid);
    out.n_obs = 0;
    const std::size_t m = out.u.size();
    out.phi.resize(m);
    out.dphi.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double> p = phi(t, k, out.u[i]);
        out.phi[i] = p;
        out.dphi[i] = big_psi_derivative(t, k, out.u[i]) * p;
    }
    return out;
}

double first_zero_detect(const EcfGrid& ecf, double floor) {
    if (!(floor >= 0.0)) throw std::invalid_argument("floor must be nonnegative");
    for (std::size_t i = 0; i < ecf.u.size(); ++i) {
        if (std::abs(ecf.phi[i]) < floor) return ecf.u[i];
    }
    return ecf.u.back();
}

PsiEstimate psi_n_eval(const EcfGrid& ecf, const KernelAlpha& k, std::optional<double> floor) {
    if (ecf.u.empty() || ecf.u[0] != 0.0) {
        throw std::invalid_argument("psi_n grid must start at u = 0");
    }
    const double fl = floor.value_or(default_ecf_floor(ecf.n_obs));
    const double alpha = k.alpha();
    const std::size_t m = ecf.u.size();

    PsiEstimate est;
    est.u = ecf.u;
    est.alpha = alpha;
    est.n_obs = ecf.n_obs;
    est.x0n = first_zero_detect(ecf, fl);
    est.psi.assign(m, {});
    est.branch.assign(m, 0);
    est.valid.assign(m, 0);

    est.valid[0] = 1;  // psi_n(0) = 0 by construction
    double phase = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        if (ecf.u[i] >= est.x0n) break;
        const std::complex<double> p = ecf.phi[i];
        const double step = std::arg(p / ecf.phi[i - 1]);
        if (std::abs(step) >= kPi * (1.0 - 1e-9)) {
            throw std::runtime_error(
                "phase unwrapping ambiguous: adjacent nodes differ by more than pi; "
                "refine the frequency grid");
        }
        phase += step;
        est.branch[i] = static_cast<std::int32_t>(
            std::lround((phase - std::arg(p)) / (2.0 * kPi)));
        const std::complex<double> log_phi(std::log(std::abs(p)), phase);
        est.psi[i] = 0.5 * (alpha * log_phi + ecf.u[i] * ecf.dphi[i] / p);
        est.valid[i] = 1;
    }
    return est;
}

}  // namespace levyma

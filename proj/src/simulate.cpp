#include "levyma/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyma {

namespace {
constexpr double kExpKernelCutoff = 40.0;
constexpr double kCholeskyJitter = 1e-12;

enum Stream : std::uint64_t { kJumpTimes = 0, kJumpSizes = 1, kGaussian = 2 };
}  // namespace

void SimConfig::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

double SimConfig::jump_window_radius() const {
    double r = kernel.support_radius();
    return std::isfinite(r) ? r : kExpKernelCutoff;
}

BandSymMatrix gaussian_grid_cov(const SimConfig& cfg) {
    cfg.validate();
    double s2 = cfg.triplet.sigma * cfg.triplet.sigma;
    std::size_t bw = static_cast<std::size_t>(
        std::ceil(2.0 * cfg.jump_window_radius() / cfg.delta));
    bw = std::min(bw, cfg.n - 1);
    BandSymMatrix c(cfg.n, bw);
    if (s2 == 0.0) return c;
    for (std::size_t b = 0; b <= bw; ++b) {
        double v = s2 * cfg.kernel.autocorr(static_cast<double>(b) * cfg.delta);
        for (std::size_t i = 0; i + b < cfg.n; ++i) c.at_band(b, i) = v;
    }
    return c;
}

BandSymMatrix banded_cholesky(const BandSymMatrix& c) {
    const std::size_t n = c.size(), bw = c.bandwidth();
    for (int attempt = 0; attempt < 2; ++attempt) {
        double jitter = attempt == 0 ? 0.0 : kCholeskyJitter;
        BandSymMatrix l(n, bw);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            std::size_t kmin = j > bw ? j - bw : 0;
            for (std::size_t i = j; i <= std::min(j + bw, n - 1); ++i) {
                double s = c(i, j);
                std::size_t k0 = std::max(kmin, i > bw ? i - bw : 0);
                for (std::size_t k = k0; k < j; ++k) s -= l(i, k) * l(j, k);
                if (i == j) {
                    s += jitter;
                    if (!(s > 0.0)) {
                        ok = false;
                        break;
                    }
                    l.at_band(0, j) = std::sqrt(s);
                } else {
                    l.at_band(i - j, j) = s / l(j, j);
                }
            }
        }
        if (ok) return l;
    }
    throw std::runtime_error("banded Cholesky failed even with diagonal jitter");
}

SamplePath simulate_path(const SimConfig& cfg) {
    cfg.validate();
    const double r = cfg.jump_window_radius();
    const double lam = cfg.triplet.lambda;

    SamplePath path;
    path.config = cfg;
    path.times.resize(cfg.n);
    path.values.resize(cfg.n);
    for (std::size_t j = 0; j < cfg.n; ++j) {
        path.times[j] = cfg.t_start + static_cast<double>(j + 1) * cfg.delta;
    }

    const double level = cfg.triplet.gamma * cfg.kernel.integral();
    std::fill(path.values.begin(), path.values.end(), level);

    // homogeneous Poisson point process on the widened window; the two-sided
    // construction collapses to one process on the real line
    std::vector<double> jump_times;
    std::vector<double> jump_sizes;
    if (lam > 0.0) {
        const double lo = cfg.t_start - r;
        const double hi = cfg.t_start + static_cast<double>(cfg.n) * cfg.delta + r;
        Rng rt = Rng::substream(cfg.seed, kJumpTimes);
        double t = lo;
        for (;;) {
            t += rt.exponential(lam);
            if (t >= hi) break;
            jump_times.push_back(t);
        }
        Rng rs = Rng::substream(cfg.seed, kJumpSizes);
        jump_sizes.resize(jump_times.size());
        for (auto& y : jump_sizes) y = cfg.triplet.jumps.sample(rs);

        for (std::size_t j = 0; j < cfg.n; ++j) {
            double tj = path.times[j];
            auto first = std::lower_bound(jump_times.begin(), jump_times.end(), tj - r);
            auto last = std::upper_bound(first, jump_times.end(), tj + r);
            double acc = 0.0;
            for (auto it = first; it != last; ++it) {
                std::size_t k = static_cast<std::size_t>(it - jump_times.begin());
                acc += cfg.kernel(tj - *it) * jump_sizes[k];
            }
            path.values[j] += acc;
        }
    }

    if (cfg.triplet.sigma > 0.0) {
        BandSymMatrix l = banded_cholesky(gaussian_grid_cov(cfg));
        Rng rg = Rng::substream(cfg.seed, kGaussian);
        std::vector<double> xi(cfg.n);
        for (auto& x : xi) x = rg.normal();
        const std::size_t bw = l.bandwidth();
        for (std::size_t i = 0; i < cfg.n; ++i) {
            double g = 0.0;
            std::size_t k0 = i > bw ? i - bw : 0;
            for (std::size_t k = k0; k <= i; ++k) g += l(i, k) * xi[k];
            path.values[i] += g;
        }
    }

    if (cfg.record_jumps) {
        path.jump_record.reserve(jump_times.size());
        for (std::size_t k = 0; k < jump_times.size(); ++k) {
            path.jump_record.emplace_back(jump_times[k], jump_sizes[k]);
        }
    }
    return path;
}

}  // namespace levyma

#include "levyma/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "levyma/estimate.hpp"
#include "levyma/simulate.hpp"
#include "levyma/spectral.hpp"

namespace levyma {

const char* param_name(Param p) {
    switch (p) {
        case Param::Sigma2: return "sigma2";
        case Param::Lambda: return "lambda";
        case Param::Gamma: return "gamma";
    }
    return "?";
}

namespace {

constexpr std::size_t kTableNs[5] = {1000, 2000, 3000, 5000, 10000};
constexpr double kTableAlphas[3] = {0.5, 0.8, 0.9};

// rows: alpha in {0.5, 0.8, 0.9}; cols: n in {1000, ..., 10000}
constexpr double kLambdaCutoffs[3][5] = {
    {1.2, 1.35, 1.4, 1.45, 1.55},
    {3.5, 3.5, 3.8, 4.0, 4.2},
    {4.5, 4.5, 4.6, 4.8, 5.1},
};
constexpr double kGammaCutoffs[3][5] = {
    {0.8, 0.85, 1.0, 1.1, 1.3},
    {2.7, 2.75, 2.75, 2.8, 3.0},
    {3.0, 3.2, 3.2, 3.3, 3.5},
};
constexpr double kSigmaCutoffs[3][5] = {
    {8.0, 8.0, 8.0, 8.2, 8.5},
    {8.5, 8.55, 8.6, 8.7, 8.8},
    {8.75, 8.8, 8.8, 9.0, 9.2},
};

const double (*table_for(Param p))[5] {
    switch (p) {
        case Param::Sigma2: return kSigmaCutoffs;
        case Param::Lambda: return kLambdaCutoffs;
        case Param::Gamma: return kGammaCutoffs;
    }
    return nullptr;
}

int nearest_alpha_row(double alpha) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(alpha - kTableAlphas[i]) < std::abs(alpha - kTableAlphas[best])) best = i;
    }
    return best;
}

double truth_of(Param p, const LevyTriplet& t) {
    switch (p) {
        case Param::Sigma2: return t.sigma * t.sigma;
        case Param::Lambda: return t.lambda;
        case Param::Gamma: return t.gamma;
    }
    return 0.0;
}

double median(std::vector<double> v) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

constexpr Param kParams[3] = {Param::Sigma2, Param::Lambda, Param::Gamma};

}  // namespace

double tuned_cutoff(Param p, double alpha, std::size_t n) {
    int row = -1, col = -1;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(alpha - kTableAlphas[i]) < 1e-12) row = i;
    }
    for (int j = 0; j < 5; ++j) {
        if (n == kTableNs[j]) col = j;
    }
    if (row < 0 || col < 0) {
        throw std::invalid_argument("no tuned cutoff for this (alpha, n) pair");
    }
    return table_for(p)[row][col];
}

void McDesign::validate() const {
    if (replications < 2) throw std::invalid_argument("need at least 2 replications");
    if (alphas.empty() || ns.empty()) throw std::invalid_argument("empty design");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw std::invalid_argument("sample sizes must be increasing");
    }
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    BaseWeight check(epsilon);  // validates epsilon
    if (cutoffs_from_table) {
        for (double a : alphas) {
            for (std::size_t n : ns) tuned_cutoff(Param::Sigma2, a, n);
        }
    }
}

std::vector<double> McDesign::candidate_cutoffs(Param p, double alpha) const {
    const double(*tab)[5] = table_for(p);
    const double* col = tab[nearest_alpha_row(alpha)];
    double lo = col[0], hi = col[0];
    for (int j = 1; j < 5; ++j) {
        lo = std::min(lo, col[j]);
        hi = std::max(hi, col[j]);
    }
    lo *= 0.5;
    hi *= 1.5;
    std::vector<double> out;
    for (double u = lo; u <= hi + 1e-9; u += 0.05) out.push_back(u);
    return out;
}

BoxStats five_number(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("empty sample");
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        double pos = q * static_cast<double>(v.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, v.size() - 1);
        double w = pos - static_cast<double>(lo);
        return v[lo] * (1.0 - w) + v[hi] * w;
    };
    return {v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back()};
}

const McCell& McReport::cell(Param p, double alpha, std::size_t n) const {
    for (const auto& c : cells) {
        if (c.param == p && c.n == n && std::abs(c.alpha - alpha) < 1e-12) return c;
    }
    throw std::out_of_range("no such cell in the report");
}

double select_un(const std::vector<double>& candidates,
                 const std::vector<double>& median_abs_errors) {
    if (candidates.empty() || candidates.size() != median_abs_errors.size()) {
        throw std::invalid_argument("candidate and error lists must match and be nonempty");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (median_abs_errors[i] < median_abs_errors[best] ||
            (median_abs_errors[i] == median_abs_errors[best] &&
             candidates[i] < candidates[best])) {
            best = i;
        }
    }
    return candidates[best];
}

McReport run_mc(const McDesign& design) {
    design.validate();
    McReport report;
    report.design = design;
    const BaseWeight base(design.epsilon);

    for (double alpha : design.alphas) {
        const KernelAlpha kernel(alpha);
        for (std::size_t n : design.ns) {
            std::map<Param, std::vector<double>> candidates;
            double u_max = 0.0;
            for (Param p : kParams) {
                candidates[p] = design.cutoffs_from_table
                                    ? std::vector<double>{tuned_cutoff(p, alpha, n)}
                                    : design.candidate_cutoffs(p, alpha);
                u_max = std::max(u_max, candidates[p].back());
            }
            const std::vector<double> grid = make_u_grid(u_max);

            // errors[param][candidate][replication]
            std::map<Param, std::vector<std::vector<double>>> errors;
            for (Param p : kParams) errors[p].assign(candidates[p].size(), {});
            int fails = 0;

            for (int rep = 0; rep < design.replications; ++rep) {
                try {
                    SimConfig cfg;
                    cfg.triplet = design.triplet;
                    cfg.kernel = kernel;
                    cfg.delta = design.delta;
                    cfg.n = n;
                    cfg.seed = design.base_seed + static_cast<std::uint64_t>(rep);
                    SamplePath path = simulate_path(cfg);
                    PsiEstimate psi = psi_n_eval(ecf_eval(path, grid), kernel);
                    for (Param p : kParams) {
                        double truth = truth_of(p, design.triplet);
                        for (std::size_t ci = 0; ci < candidates[p].size(); ++ci) {
                            WeightFamily fam(base, candidates[p][ci]);
                            double est = 0.0;
                            switch (p) {
                                case Param::Sigma2: est = estimate_sigma2(psi, fam); break;
                                case Param::Lambda: est = estimate_lambda(psi, fam); break;
                                case Param::Gamma: est = estimate_gamma(psi, fam); break;
                            }
                            errors[p][ci].push_back(est - truth);
                        }
                    }
                } catch (const std::exception&) {
                    ++fails;
                }
            }

            for (Param p : kParams) {
                std::vector<double> med_abs(candidates[p].size());
                for (std::size_t ci = 0; ci < candidates[p].size(); ++ci) {
                    std::vector<double> abs_err(errors[p][ci].size());
                    for (std::size_t r = 0; r < abs_err.size(); ++r) {
                        abs_err[r] = std::abs(errors[p][ci][r]);
                    }
                    med_abs[ci] = median(std::move(abs_err));
                }
                double chosen = select_un(candidates[p], med_abs);
                std::size_t ci = static_cast<std::size_t>(
                    std::find(candidates[p].begin(), candidates[p].end(), chosen) -
                    candidates[p].begin());

                McCell cell;
                cell.param = p;
                cell.alpha = alpha;
                cell.n = n;
                cell.chosen_cutoff = chosen;
                cell.fail_count = fails;
                if (errors[p][ci].empty()) {
                    throw std::runtime_error("all replications failed in one cell");
                }
                cell.errors = five_number(errors[p][ci]);
                cell.median_abs_error = med_abs[ci];
                if (design.keep_raw) cell.raw = errors[p][ci];
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

double RateSpec::cutoff_exponent() const {
    switch (param) {
        case Param::Sigma2: return s + 3.0;
        case Param::Gamma: return s + 2.0;
        case Param::Lambda: return s + 1.0;
    }
    return 0.0;
}

SlopeDiagnostic rate_check(const McReport& report, const RateSpec& spec, double alpha) {
    std::vector<double> x, y;
    for (std::size_t n : report.design.ns) {
        const McCell& c = report.cell(spec.param, alpha, n);
        if (c.median_abs_error > 0.0) {
            x.push_back(std::log(c.chosen_cutoff));
            y.push_back(std::log(c.median_abs_error));
        }
    }
    if (x.size() < 3) throw std::invalid_argument("rate check needs at least 3 sample sizes");

    SlopeDiagnostic diag;
    diag.theoretical_slope = -spec.cutoff_exponent();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (syy < 1e-24) {  // constant errors
        diag.fitted_slope = 0.0;
        diag.degenerate = true;
        return diag;
    }
    if (sxx < 1e-24) {  // same cutoff chosen everywhere
        diag.fitted_slope = 0.0;
        diag.degenerate = true;
        return diag;
    }
    diag.fitted_slope = sxy / sxx;
    return diag;
}

}  // namespace levyma

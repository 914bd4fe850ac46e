#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levyma/levy.hpp"

namespace levyma {

enum class Param { Sigma2, Lambda, Gamma };

const char* param_name(Param p);

/// Cutoffs found by grid search for the default experiment design
/// (gamma = 5, lambda = 1, sigma = 0), indexed by parameter, kernel shape
/// alpha in {0.5, 0.8, 0.9} and sample size n in {1000, 2000, 3000, 5000,
/// 10000}. Throws for arguments outside the table.
double tuned_cutoff(Param p, double alpha, std::size_t n);

/// Replicated-estimation experiment design.
struct McDesign {
    std::vector<double> alphas{0.5, 0.8, 0.9};
    std::vector<std::size_t> ns{1000, 2000, 3000, 5000, 10000};
    int replications = 25;
    LevyTriplet triplet{5.0, 0.0, 1.0};
    double delta = 1.0;
    std::uint64_t base_seed = 1;
    double epsilon = 0.05;        // base weight shape
    bool cutoffs_from_table = false;  // single tuned candidate instead of a search grid
    bool keep_raw = false;

    void validate() const;

    /// Candidate cutoffs for the grid search: the tuned column for the
    /// nearest tabulated alpha, widened by +-50% at step 0.05.
    std::vector<double> candidate_cutoffs(Param p, double alpha) const;
};

/// Five-number summary (min, quartiles, max).
struct BoxStats {
    double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0;
};

BoxStats five_number(std::vector<double> values);

struct McCell {
    Param param;
    double alpha;
    std::size_t n;
    double chosen_cutoff;
    BoxStats errors;           // estimate minus truth at the chosen cutoff
    double median_abs_error;
    int fail_count;
    std::vector<double> raw;   // retained when design.keep_raw
};

struct McReport {
    McDesign design;
    std::vector<McCell> cells;

    const McCell& cell(Param p, double alpha, std::size_t n) const;
};

/// Runs the full design: per (alpha, n, replication) simulate once, estimate
/// every parameter at every candidate cutoff, then aggregate. Replication r
/// uses seed base_seed + r. Failed replications are counted per cell, not
/// fatal.
McReport run_mc(const McDesign& design);

/// Candidate minimizing the median absolute error; ties resolved toward the
/// smaller cutoff.
double select_un(const std::vector<double>& candidates,
                 const std::vector<double>& median_abs_errors);

/// Smoothness-indexed convergence-rate specification. In terms of the cutoff
/// the error exponents are s+3 (sigma^2), s+2 (gamma), s+1 (lambda); divided
/// by two they give the exponents in log n under U_n ~ sqrt(log n).
struct RateSpec {
    int s = 1;
    Param param = Param::Sigma2;

    double cutoff_exponent() const;
    double log_sample_exponent() const { return cutoff_exponent() / 2.0; }
};

struct SlopeDiagnostic {
    double fitted_slope = 0.0;
    double theoretical_slope = 0.0;
    bool degenerate = false;
};

/// Regression of log median-absolute-error on log chosen-cutoff across the
/// sample sizes of one (parameter, alpha) column. Diagnostic only.
SlopeDiagnostic rate_check(const McReport& report, const RateSpec& spec, double alpha);

}  // namespace levyma

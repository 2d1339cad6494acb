#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricsyz/betti.hpp"

namespace toricsyz {

// A row of the Betti table in normal coordinates: for each p the effective
// a with p = r/2 + a*sqrt(r)/2, the exact entry, and its F1-scaled value.
struct RowSample {
    long p = 0;
    double a_eff = 0.0;
    Int raw;
    double scaled = 0.0;
};

struct RowDistribution {
    SurfaceSpec spec;
    int q = 1;
    std::vector<RowSample> samples;
    std::string scale_description;
};

// sqrt(2*pi*r)/2^{r+1} * C(r+c1, p+c2) against 2^{c1} * exp(-a^2/2).
struct CltSample {
    long r = 0;
    long p = 0;
    long c1 = 0;
    long c2 = 0;
    double value = 0.0;
    double target = 0.0;
};

// Least-squares fit of log|error| against log r.
struct DecayFit {
    std::vector<std::pair<double, double>> points;  // (log r, log |error|)
    double slope = 0.0;
    double intercept = 0.0;
};

// The unique a with p = r/2 + a*sqrt(r)/2, i.e. (2p - r)/sqrt(r).
double effective_a(long r, long p);

struct ScaleFactor {
    double log_value = 0.0;
    double value = 0.0;  // exp(log_value); may underflow to 0 for large r
};

// F1(r) = 3*sqrt(2*pi) / (2^r * sqrt(r)), returned in log space as well.
ScaleFactor scale_factor_F1(long r);

struct ScaledRowOptions {
    // Above this r the row is restricted to the window |a_eff| <= a_window
    // instead of materializing the whole table.
    long full_table_r_bound = 400;
    double a_window = 6.0;
};

// Scaled row values. q = 1 uses the numerator reconstruction; q = 2 the
// closed form. Raw values are converted to logs via mantissa/exponent
// extraction, then combined with log F1 and exponentiated.
RowDistribution scaled_row(const SurfaceSpec& spec, int q, const FormulaVariant& variant,
                           const ScaledRowOptions& options = {});

// Exact big-integer binomial scaled in log space; target uses effective_a(r, p).
CltSample clt_value(long r, long p, long c1, long c2);

// (r/(r+a*sqrt(r)))^{(r+a*sqrt(r))/2} * (r/(r-a*sqrt(r)))^{(r-a*sqrt(r))/2},
// evaluated via exponent*log. Requires |a| < sqrt(r).
double lemma_lhs(long r, double a);

// Fits log|error| against log r; needs >= 4 samples with error > 0.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& samples);

// ---- desk-scale theorem verification ---------------------------------------

struct Q1ErrorPoint {
    long d = 0;
    long r = 0;
    double max_abs_error = 0.0;  // max over |a_eff| <= a_window of |scaled - e^{-a^2/2}|
};

struct Q2SupportPoint {
    long d = 0;
    long r = 0;
    // [lo, hi] of nonzero second-row entries; nullopt when the row vanishes
    std::optional<std::pair<long, long>> support;
    long peak_p = 0;         // argmax of the row (0 when empty)
    bool central_zero = false;  // k_{p,2} = 0 throughout |a_eff| <= a_window
};

struct TheoremCheckReport {
    long delta = 0;
    double a_window = 2.0;
    FormulaVariant variant;
    std::vector<Q1ErrorPoint> q1_errors;
    std::optional<DecayFit> q1_decay;
    bool q1_errors_decreasing = false;
    std::vector<Q2SupportPoint> q2_support;
    // Smallest d with the second row's support entirely right of the window,
    // so no scaling function can produce a central Gaussian profile.
    long q2_vanishing_threshold_d = 0;
    double tolerance_constant = 10.0;  // the K of the K/sqrt(r) windows
};

// Evaluates both rows across d_list (must be nondecreasing).
TheoremCheckReport theorem_check(long delta, const std::vector<long>& d_list,
                                 double a_window, const FormulaVariant& variant);

}  // namespace toricsyz

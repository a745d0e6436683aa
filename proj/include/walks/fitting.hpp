#ifndef WALKS_FITTING_HPP
#define WALKS_FITTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "walks/asymptotics.hpp"
#include "walks/enumerate.hpp"

namespace walks {

struct Window {
    int lo = 0;
    int hi = 0;
};

// Least-squares fit of r_n = s_n n^alpha / base^n against the half-power
// basis {1, n^-1/2, ..., n^-m/2} on one residue class.
struct FitResult {
    double base = 0;
    double order_exponent = 0;
    std::vector<double> coefficients;        // c_0..c_m
    std::vector<double> coefficient_errors;  // see fit docs
    Window window;
    double residual_rms = 0;
    int residue_class = 0;
    int period = 1;
    double condition_number = 0;
    bool ill_conditioned = false; // reported, fit still returned
};

// Ratio estimate (s_N / s_{N-q})^{1/q} at the largest N of the class with
// one Richardson step; the ratio step q = 2 * period keeps the two ratios
// phase-aligned when subdominant critical points oscillate with period 2p.
double estimate_base(const CountSequence& seq, int period = 1, int residue_class = 0);

FitResult fit_expansion(const CountSequence& seq, double base, double alpha, int terms,
                        Window window, int period = 1, int residue_class = 0);

// fit_expansion on the two phase classes mod 2*period, averaged; coefficient
// errors combine the regression error with the spread across sub-fits (the
// residual structure of these sequences is systematic rather than noisy).
FitResult fit_expansion_robust(const CountSequence& seq, double base, double alpha,
                               int terms, Window window, int period = 1,
                               int residue_class = 0);

struct ToleranceProfile {
    double base_rel = 0.005;
    double c0_rel = 0.015;
    std::optional<double> c1_rel; // compared only when present and predicted
    int max_terms = 3;
};

struct ClassComparison {
    int residue = 0;
    double predicted_base = 0, fitted_base = 0, base_rel_err = 0;
    double predicted_c0 = 0, fitted_c0 = 0, c0_rel_err = 0;
    std::optional<double> predicted_c1, fitted_c1, c1_rel_err;
    double residual_rms = 0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<ClassComparison> classes;
    bool pass = false;
    Window window;
};

VerificationReport compare(const AsymptoticPrediction& pred, const CountSequence& seq,
                           const ToleranceProfile& tol = {});

// Default fit window [N/4, N].
Window default_window(int max_n);

// Period heuristics when no prediction is available: tests whether the
// ratio q_n = s_n s_{n+2} / s_{n+1}^2 oscillates persistently.
int detect_period(const CountSequence& seq);

} // namespace walks

#endif

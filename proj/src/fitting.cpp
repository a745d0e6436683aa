#include "walks/fitting.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "walks/errors.hpp"

namespace walks {

namespace {

using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

std::vector<int> class_members(const Window& w, int modulus, int residue) {
    std::vector<int> ns;
    for (int n = std::max(1, w.lo); n <= w.hi; ++n)
        if (n % modulus == residue % modulus) ns.push_back(n);
    return ns;
}

constexpr double kConditionLimit = 1e9;

} // namespace

Window default_window(int max_n) { return Window{max_n / 4, max_n}; }

double estimate_base(const CountSequence& seq, int period, int residue_class) {
    const int q = 2 * period;
    int n_top = seq.max_length();
    while (n_top >= 0 && n_top % period != residue_class % period) --n_top;
    if (n_top < 4 * period || n_top - 2 * q < 1)
        throw WalkError(ErrorCode::InsufficientData,
                        "need at least 4 terms per residue class for base estimation");
    for (int n = n_top - 2 * q; n <= n_top; n += period) {
        if (seq.mode() == ArithmeticMode::Exact ? seq.exact_value(n) <= 0
                                                : seq.value(n) <= 0)
            throw WalkError(ErrorCode::NonPositiveTerms,
                            "non-positive counts in the ratio window");
    }
    long double u1 =
        std::exp((seq.log_value(n_top) - seq.log_value(n_top - q)) / static_cast<long double>(q));
    long double u2 = std::exp((seq.log_value(n_top - q) - seq.log_value(n_top - 2 * q)) /
                              static_cast<long double>(q));
    // u(N) = b (1 + A/N + ...): one Richardson step in 1/N
    long double refined = u1 + (u1 - u2) * static_cast<long double>(n_top - q) / q;
    return static_cast<double>(refined);
}

FitResult fit_expansion(const CountSequence& seq, double base, double alpha, int terms,
                        Window window, int period, int residue_class) {
    if (terms < 1) throw WalkError(ErrorCode::BadInput, "need at least one basis term");
    if (window.lo < 8) window.lo = 8;
    if (window.hi > seq.max_length()) window.hi = seq.max_length();
    std::vector<int> ns = class_members(window, period, residue_class);
    if (static_cast<int>(ns.size()) < terms + 1)
        throw WalkError(ErrorCode::InsufficientData, "fit window has fewer points than basis");

    const int cols = terms;
    Matrix design(ns.size(), cols);
    Vector rhs(ns.size());
    const long double log_base = std::log(static_cast<long double>(base));
    for (std::size_t i = 0; i < ns.size(); ++i) {
        int n = ns[i];
        long double lr = seq.log_value(n) +
                         static_cast<long double>(alpha) * std::log(static_cast<long double>(n)) -
                         static_cast<long double>(n) * log_base;
        long double r = std::exp(lr);
        // fold the float rounding bound into per-point weights
        long double sigma = 1.0L + static_cast<long double>(seq.rounding_bound(n)) * 1e6L;
        rhs(i) = r / sigma;
        for (int k = 0; k < cols; ++k)
            design(i, k) = std::pow(static_cast<long double>(n), -k / 2.0L) / sigma;
    }

    Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Vector coef = svd.solve(rhs);
    double cond = static_cast<double>(svd.singularValues()(0) /
                                      svd.singularValues()(svd.singularValues().size() - 1));

    Vector resid = rhs - design * coef;
    long double rms = std::sqrt(resid.squaredNorm() / resid.size());

    FitResult out;
    out.base = base;
    out.order_exponent = alpha;
    out.window = window;
    out.period = period;
    out.residue_class = residue_class;
    out.residual_rms = static_cast<double>(rms);
    out.condition_number = cond;
    out.ill_conditioned = cond > kConditionLimit;
    for (int k = 0; k < cols; ++k) out.coefficients.push_back(static_cast<double>(coef(k)));

    // regression standard errors from (X^T X)^-1
    int dof = std::max<int>(1, static_cast<int>(ns.size()) - cols);
    long double sigma2 = resid.squaredNorm() / dof;
    Matrix xtx_inv = (design.transpose() * design).inverse();
    for (int k = 0; k < cols; ++k)
        out.coefficient_errors.push_back(
            static_cast<double>(std::sqrt(sigma2 * xtx_inv(k, k))));
    return out;
}

FitResult fit_expansion_robust(const CountSequence& seq, double base, double alpha,
                               int terms, Window window, int period, int residue_class) {
    FitResult a =
        fit_expansion(seq, base, alpha, terms, window, 2 * period, residue_class);
    FitResult b =
        fit_expansion(seq, base, alpha, terms, window, 2 * period, residue_class + period);
    FitResult out = a;
    out.period = period;
    out.residue_class = residue_class;
    out.residual_rms = std::max(a.residual_rms, b.residual_rms);
    out.condition_number = std::max(a.condition_number, b.condition_number);
    out.ill_conditioned = a.ill_conditioned || b.ill_conditioned;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
        out.coefficients[k] = 0.5 * (a.coefficients[k] + b.coefficients[k]);
        double spread = 0.5 * std::abs(a.coefficients[k] - b.coefficients[k]);
        out.coefficient_errors[k] =
            std::max({a.coefficient_errors[k], b.coefficient_errors[k], spread});
    }
    return out;
}

int detect_period(const CountSequence& seq) {
    int n_hi = seq.max_length();
    int n_lo = std::max(8, n_hi / 2);
    if (n_hi - n_lo < 8) return 1;
    int flips = 0, count = 0;
    double prev = 0;
    std::vector<double> magnitudes;
    for (int n = n_lo; n + 2 <= n_hi; ++n) {
        long double q =
            seq.log_value(n) + seq.log_value(n + 2) - 2.0L * seq.log_value(n + 1);
        double dev = static_cast<double>(q);
        if (count > 0 && dev * prev < 0) ++flips;
        prev = dev;
        magnitudes.push_back(std::abs(dev));
        ++count;
    }
    // Distinct parity constants make the log-convexity alternate with an
    // n-independent amplitude 2|log(C_even/C_odd)|; subleading oscillations
    // decay with n and must not trigger.
    std::nth_element(magnitudes.begin(), magnitudes.begin() + magnitudes.size() / 2,
                     magnitudes.end());
    double median = magnitudes[magnitudes.size() / 2];
    return (flips > count * 3 / 4 && median > 1e-3) ? 2 : 1;
}

VerificationReport compare(const AsymptoticPrediction& pred, const CountSequence& seq,
                           const ToleranceProfile& tol) {
    VerificationReport report;
    report.window = default_window(seq.max_length());
    bool all_pass = true;

    for (const auto& cls : pred.classes) {
        ClassComparison cc;
        cc.residue = cls.residue;
        cc.predicted_base = cls.base;

        cc.fitted_base = estimate_base(seq, pred.period, cls.residue);
        cc.base_rel_err = std::abs(cc.fitted_base - cls.base) / cls.base;

        FitResult fit = fit_expansion_robust(seq, cls.base, to_double(cls.order_exponent),
                                             tol.max_terms + 1, report.window, pred.period,
                                             cls.residue);
        cc.residual_rms = fit.residual_rms;
        cc.predicted_c0 = cls.constant;
        cc.fitted_c0 = fit.coefficients[0];
        cc.c0_rel_err = std::abs(cc.fitted_c0 - cc.predicted_c0) / std::abs(cc.predicted_c0);

        bool pass = cc.base_rel_err <= tol.base_rel && cc.c0_rel_err <= tol.c0_rel;
        if (pred.second_order && tol.c1_rel && fit.coefficients.size() > 1) {
            cc.predicted_c1 = pred.second_order->kappa;
            cc.fitted_c1 = fit.coefficients[1];
            double denom = std::abs(*cc.predicted_c1);
            if (denom < 1e-12) denom = std::abs(cc.predicted_c0);
            cc.c1_rel_err = std::abs(*cc.fitted_c1 - *cc.predicted_c1) / denom;
            pass = pass && *cc.c1_rel_err <= *tol.c1_rel;
        }
        cc.pass = pass;
        all_pass = all_pass && pass;
        report.classes.push_back(std::move(cc));
    }
    report.pass = all_pass;
    return report;
}

} // namespace walks

#ifndef WALKS_SURD_HPP
#define WALKS_SURD_HPP

#include <string>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

// Exact closed-form reals of the shape  (sum_i q_i * sqrt(u_i)) * pi^(p/2)
// with rational q_i and squarefree positive integer radicands u_i. This is
// closed under +, -, * and covers the bases and leading constants of all
// four asymptotic regimes (reciprocals exist for sums of at most two
// surds). Values that fall outside the representable family are carried
// numerically with exact() == false.
class SurdExpr {
public:
    struct Term {
        Rational coef;
        BigInt radicand; // squarefree, >= 1
    };

    SurdExpr() = default;
    SurdExpr(const Rational& q) { add(q, 1); } // NOLINT(google-explicit-constructor)
    static SurdExpr sqrt_of(const Rational& q); // q >= 0
    static SurdExpr pi_half_power(int p);

    // q * sqrt(radicand) with any rational radicand >= 0
    void add(const Rational& q, const Rational& radicand);

    bool exact() const { return exact_; }
    bool is_zero() const { return exact_ && terms_.empty(); }
    bool is_rational() const;
    int pi_half_power_value() const { return pi_half_; }
    const std::vector<Term>& terms() const { return terms_; }

    double value() const;
    std::string str() const;

    SurdExpr operator-() const;
    friend SurdExpr operator+(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator-(const SurdExpr& a, const SurdExpr& b);
    friend SurdExpr operator*(const SurdExpr& a, const SurdExpr& b);
    // defined when the divisor has at most two terms (quadratic-surd
    // rationalization); otherwise the result is approximate
    friend SurdExpr operator/(const SurdExpr& a, const SurdExpr& b);
    friend bool operator==(const SurdExpr& a, const SurdExpr& b);

    // square root; exact for a single term or a denestable two-term sum,
    // approximate otherwise (requires a nonnegative value)
    SurdExpr sqrt() const;

    SurdExpr with_pi_half(int p) const;

    // numeric fallback carrying a descriptive form
    static SurdExpr approximate(double v, const std::string& desc);

private:
    void normalize();

    std::vector<Term> terms_; // sorted by radicand, no zero coefficients
    int pi_half_ = 0;         // value is multiplied by pi^(pi_half_/2)
    bool exact_ = true;
    double approx_ = 0.0;     // used when !exact_
    std::string approx_desc_;
};

} // namespace walks

#endif

#ifndef WALKS_LAURENT_HPP
#define WALKS_LAURENT_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

// Sparse Laurent polynomial: exponent vector -> exact rational coefficient.
// Terms with zero coefficient are never stored. Exponents may be negative.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Rational& c);
    // The monomial c * prod z_j^{e_j}.
    static LaurentPoly monomial(int nvars, const Exponents& e, const Rational& c);

    int variables() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const { return coefficient(Exponents(nvars_, 0)); }

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Product with the monomial prod z_j^{shift_j}.
    LaurentPoly shifted(const Exponents& shift) const;

    // Negates the exponent of variable k (reflection z_k -> 1/z_k).
    LaurentPoly reflected(int k) const;

    // Renames variables: term exponent e goes to position perm[j] for each j,
    // i.e. new_e[perm[j]] = e[j].
    LaurentPoly permuted(const std::vector<int>& perm) const;

    // Drops every term whose exponent in some variable exceeds its cap
    // (caps apply to nonnegative-exponent polynomials).
    LaurentPoly truncated(const std::vector<int>& caps) const;

    // The coefficient of z_k^e as a polynomial in the remaining variables
    // (variable order preserved).
    LaurentPoly section(int k, int e) const;

    // Inserts a fresh variable (with exponent 0 everywhere) at position k.
    LaurentPoly with_variable_inserted(int k) const;

    int min_exponent(int k) const;
    int max_exponent(int k) const;

    // Exact evaluations.
    Rational eval_rational(const std::vector<Rational>& point) const;
    GaussianRational eval_gaussian(const std::vector<GaussianRational>& point) const;
    Rational at_ones() const; // sum of coefficients

    std::complex<double> eval_complex(const std::vector<std::complex<double>>& point) const;

    // Canonical text form: exponent-lexicographic term order, exact
    // coefficients, variables named x,y,z (d <= 3) or z1..zd, t last when
    // the caller says so.
    std::string str(const std::vector<std::string>& names) const;
    std::string str() const; // default names

    static std::vector<std::string> default_names(int nvars, bool last_is_t);

private:
    int nvars_;
    TermMap terms_;
};

} // namespace walks

#endif

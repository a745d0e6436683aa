#ifndef WALKS_RATIONAL_HPP
#define WALKS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "walks/errors.hpp"

namespace walks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

// "p/q" with q omitted when 1.
std::string rational_str(const Rational& r);

double to_double(const Rational& r);
long double to_long_double(const Rational& r);

// Complex numbers with exact rational real and imaginary parts. Enough
// arithmetic for evaluating Laurent polynomials at torus points like
// (-1, i) and for exact squared-modulus tests.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational one() { return {Rational(1), Rational(0)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Rational norm2() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational inverse() const {
        Rational n = norm2();
        if (n == 0) throw WalkError(ErrorCode::BadInput, "division by zero Gaussian rational");
        return {re / n, -im / n};
    }

    // z^e for any integer e (negative exponents via the exact inverse).
    GaussianRational pow(long e) const;

    std::complex<double> to_complex() const {
        return {to_double(re), to_double(im)};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& a, const GaussianRational& b) {
        return {a * b.re, a * b.im};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

std::string gaussian_str(const GaussianRational& z);

} // namespace walks

#endif

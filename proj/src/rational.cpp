#include "walks/rational.hpp"

#include <cctype>
#include <sstream>

namespace walks {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw WalkError(ErrorCode::BadInput, "empty rational literal");

    auto bad = [&]() -> WalkError {
        return WalkError(ErrorCode::BadInput, "cannot parse rational literal '" + text + "'");
    };

    bool neg = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size()) throw bad();

    auto parse_digits = [&](std::size_t& p) -> BigInt {
        if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) throw bad();
        BigInt v = 0;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            v = v * 10 + (s[p] - '0');
            ++p;
        }
        return v;
    };

    BigInt intpart = parse_digits(pos);
    Rational result;
    if (pos == s.size()) {
        result = Rational(intpart);
    } else if (s[pos] == '/') {
        ++pos;
        bool dneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            dneg = s[pos] == '-';
            ++pos;
        }
        BigInt den = parse_digits(pos);
        if (pos != s.size()) throw bad();
        if (den == 0) throw WalkError(ErrorCode::BadInput, "zero denominator in '" + text + "'");
        if (dneg) neg = !neg;
        result = Rational(intpart, den);
    } else if (s[pos] == '.') {
        ++pos;
        BigInt frac = 0;
        BigInt scale = 1;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            frac = frac * 10 + (s[pos] - '0');
            scale *= 10;
            ++pos;
        }
        if (pos != s.size()) throw bad();
        result = Rational(intpart) + Rational(frac, scale);
    } else {
        throw bad();
    }
    return neg ? -result : result;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

GaussianRational GaussianRational::pow(long e) const {
    GaussianRational base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    GaussianRational acc = GaussianRational::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string gaussian_str(const GaussianRational& z) {
    std::ostringstream os;
    if (z.im == 0) {
        os << rational_str(z.re);
    } else if (z.re == 0) {
        if (z.im == 1) os << "i";
        else if (z.im == -1) os << "-i";
        else os << rational_str(z.im) << "*i";
    } else {
        os << rational_str(z.re) << (z.im > 0 ? "+" : "-");
        Rational a = abs(z.im);
        if (a != 1) os << rational_str(a) << "*";
        os << "i";
    }
    return os.str();
}

} // namespace walks

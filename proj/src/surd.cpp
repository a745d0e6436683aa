#include "walks/surd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "walks/errors.hpp"

namespace walks {

namespace {

const double kPi = 3.14159265358979323846;

// splits n = s^2 * f with f squarefree (trial division, then a perfect
// square check on the remainder; good for the small radicands that arise
// from step weights)
void extract_square(BigInt n, BigInt& square_root, BigInt& squarefree) {
    square_root = 1;
    squarefree = 1;
    if (n <= 0) throw WalkError(ErrorCode::BadInput, "radicand must be positive");
    for (BigInt p = 2; p * p <= n && p < 100000; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2) squarefree *= p;
    }
    if (n > 1) {
        BigInt r = sqrt(n);
        if (r * r == n) square_root *= r;
        else squarefree *= n;
    }
}

} // namespace

void SurdExpr::add(const Rational& q, const Rational& radicand) {
    if (q == 0) return;
    if (radicand < 0) throw WalkError(ErrorCode::BadInput, "negative radicand");
    if (radicand == 0) return;
    // sqrt(p/q) = sqrt(p*q)/q
    BigInt pq = BigInt(numerator(radicand)) * BigInt(denominator(radicand));
    BigInt root, sf;
    extract_square(pq, root, sf);
    Rational coef = q * Rational(root, BigInt(denominator(radicand)));
    terms_.push_back({coef, sf});
    normalize();
}

void SurdExpr::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().radicand == t.radicand)
            merged.back().coef += t.coef;
        else
            merged.push_back(t);
    }
    terms_.clear();
    for (auto& t : merged)
        if (t.coef != 0) terms_.push_back(t);
}

SurdExpr SurdExpr::sqrt_of(const Rational& q) {
    SurdExpr e;
    e.add(1, q);
    return e;
}

SurdExpr SurdExpr::pi_half_power(int p) {
    SurdExpr e{Rational(1)};
    e.pi_half_ = p;
    return e;
}

bool SurdExpr::is_rational() const {
    if (!exact_ || pi_half_ != 0) return false;
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

double SurdExpr::value() const {
    if (!exact_) return approx_;
    double v = 0;
    for (const auto& t : terms_)
        v += to_double(t.coef) * std::sqrt(t.radicand.convert_to<double>());
    return v * std::pow(kPi, pi_half_ / 2.0);
}

SurdExpr SurdExpr::operator-() const {
    SurdExpr out = *this;
    if (!out.exact_) {
        out.approx_ = -out.approx_;
        out.approx_desc_ = "-(" + out.approx_desc_ + ")";
        return out;
    }
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

SurdExpr operator+(const SurdExpr& a, const SurdExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.exact_ || !b.exact_ || a.pi_half_ != b.pi_half_)
        return SurdExpr::approximate(a.value() + b.value(),
                                     "(" + a.str() + ")+(" + b.str() + ")");
    SurdExpr out = a;
    for (const auto& t : b.terms_) out.terms_.push_back(t);
    out.normalize();
    return out;
}

SurdExpr operator-(const SurdExpr& a, const SurdExpr& b) { return a + (-b); }

SurdExpr operator*(const SurdExpr& a, const SurdExpr& b) {
    if (!a.exact_ || !b.exact_)
        return SurdExpr::approximate(a.value() * b.value(),
                                     "(" + a.str() + ")*(" + b.str() + ")");
    SurdExpr out;
    out.pi_half_ = a.pi_half_ + b.pi_half_;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.add(ta.coef * tb.coef, Rational(ta.radicand * tb.radicand));
    return out;
}

SurdExpr operator/(const SurdExpr& a, const SurdExpr& b) {
    if (b.is_zero()) throw WalkError(ErrorCode::BadInput, "division by zero surd");
    if (!a.exact_ || !b.exact_ || b.terms_.size() > 2)
        return SurdExpr::approximate(a.value() / b.value(),
                                     "(" + a.str() + ")/(" + b.str() + ")");
    if (b.terms_.size() == 1) {
        // 1/(q sqrt(u)) = sqrt(u)/(q u)
        const auto& t = b.terms_[0];
        SurdExpr inv;
        inv.pi_half_ = -b.pi_half_;
        inv.add(Rational(1) / (t.coef * Rational(t.radicand)), Rational(t.radicand));
        return a * inv;
    }
    // conjugate trick for p + q sqrt(u) shapes (two distinct radicands)
    SurdExpr conj = b;
    conj.pi_half_ = 0;
    conj.terms_[1].coef = -conj.terms_[1].coef;
    SurdExpr bb = b;
    bb.pi_half_ = 0;
    SurdExpr denom = bb * conj; // rational if the radicands multiply to a square
    if (!denom.is_rational())
        return SurdExpr::approximate(a.value() / b.value(),
                                     "(" + a.str() + ")/(" + b.str() + ")");
    Rational dr = denom.terms_.empty() ? Rational(0) : denom.terms_[0].coef;
    SurdExpr inv = conj * SurdExpr(Rational(1) / dr);
    inv.pi_half_ = -b.pi_half_;
    return a * inv;
}

bool operator==(const SurdExpr& a, const SurdExpr& b) {
    if (!a.exact_ || !b.exact_) return false;
    if (a.pi_half_ != b.pi_half_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].radicand != b.terms_[i].radicand)
            return false;
    return true;
}

SurdExpr SurdExpr::sqrt() const {
    if (!exact_)
        return approximate(std::sqrt(value()), "sqrt(" + str() + ")");
    if (pi_half_ % 2 != 0)
        return approximate(std::sqrt(value()), "sqrt(" + str() + ")");
    if (terms_.empty()) return SurdExpr(Rational(0));
    if (terms_.size() == 1) {
        const Term& t = terms_[0];
        if (t.coef < 0 && value() < 0)
            throw WalkError(ErrorCode::BadInput, "square root of a negative surd");
        if (t.radicand == 1) {
            SurdExpr out = sqrt_of(t.coef);
            out.pi_half_ = pi_half_ / 2;
            return out;
        }
        // sqrt(q sqrt(u)) is a fourth root; fall back to numeric
        return approximate(std::sqrt(value()), "sqrt(" + str() + ")");
    }
    if (terms_.size() == 2 && terms_[0].radicand == 1) {
        // denest sqrt(a + b sqrt(u)) when a^2 - b^2 u is a rational square
        const Rational a = terms_[0].coef;
        const Rational b = terms_[1].coef;
        const Rational u = Rational(terms_[1].radicand);
        Rational disc = a * a - b * b * u;
        if (disc >= 0) {
            BigInt pn = BigInt(numerator(disc)) * BigInt(denominator(disc));
            BigInt r = boost::multiprecision::sqrt(pn);
            if (r * r == pn) {
                Rational root_disc(r, BigInt(denominator(disc)));
                Rational x = (a + root_disc) / 2;
                Rational y = (a - root_disc) / 2;
                // sqrt(a + b sqrt(u)) = sqrt(x) + sign(b) sqrt(y)
                SurdExpr out;
                out.add(1, x);
                SurdExpr second;
                second.add(b >= 0 ? 1 : -1, y);
                out = out + second;
                out.pi_half_ = pi_half_ / 2;
                // verify (guards the branch of the inner sign)
                SurdExpr sq = out * out;
                SurdExpr self = *this;
                self.pi_half_ = pi_half_ / 2 * 2;
                if (sq == self) return out;
            }
        }
    }
    return approximate(std::sqrt(value()), "sqrt(" + str() + ")");
}

SurdExpr SurdExpr::with_pi_half(int p) const {
    SurdExpr out = *this;
    if (!out.exact_) {
        out.approx_ *= std::pow(kPi, p / 2.0);
        out.approx_desc_ += "*pi^(" + std::to_string(p) + "/2)";
        return out;
    }
    out.pi_half_ += p;
    return out;
}

SurdExpr SurdExpr::approximate(double v, const std::string& desc) {
    SurdExpr out;
    out.exact_ = false;
    out.approx_ = v;
    out.approx_desc_ = desc;
    return out;
}

std::string SurdExpr::str() const {
    if (!exact_) return approx_desc_;
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool paren = terms_.size() > 1 && pi_half_ != 0;
    if (paren) os << "(";
    bool first = true;
    for (const auto& t : terms_) {
        Rational a = abs(t.coef);
        if (first) {
            if (t.coef < 0) os << "-";
        } else {
            os << (t.coef < 0 ? " - " : " + ");
        }
        first = false;
        if (t.radicand == 1) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "sqrt(" << t.radicand << ")";
        }
    }
    if (paren) os << ")";
    if (pi_half_ != 0) {
        int p = pi_half_;
        if (p == -1) os << "/sqrt(pi)";
        else if (p == -2) os << "/pi";
        else if (p == 1) os << "*sqrt(pi)";
        else if (p == 2) os << "*pi";
        else if (p % 2 == 0) os << (p > 0 ? "*pi^" : "/pi^") << std::abs(p) / 2;
        else os << (p > 0 ? "*pi^(" : "/pi^(") << std::abs(p) << "/2)";
    }
    return os.str();
}

} // namespace walks

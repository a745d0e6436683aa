#include "walks/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace walks {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    assert(nvars_ == other.nvars_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    assert(nvars_ == other.nvars_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    assert(a.nvars_ == b.nvars_);
    LaurentPoly out(a.nvars_);
    LaurentPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, c * coef);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    assert(static_cast<int>(shift.size()) == nvars_);
    LaurentPoly out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int j = 0; j < nvars_; ++j) e[j] = ea[j] + shift[j];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::reflected(int k) const {
    LaurentPoly out(nvars_);
    Exponents e;
    for (const auto& [ea, c] : terms_) {
        e = ea;
        e[k] = -e[k];
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
    assert(static_cast<int>(perm.size()) == nvars_);
    LaurentPoly out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int j = 0; j < nvars_; ++j) e[perm[j]] = ea[j];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::truncated(const std::vector<int>& caps) const {
    assert(static_cast<int>(caps.size()) == nvars_);
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int j = 0; j < nvars_; ++j)
            if (e[j] > caps[j]) { keep = false; break; }
        if (keep) out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::section(int k, int sel) const {
    LaurentPoly out(nvars_ - 1);
    Exponents e(nvars_ - 1);
    for (const auto& [ea, c] : terms_) {
        if (ea[k] != sel) continue;
        int idx = 0;
        for (int j = 0; j < nvars_; ++j)
            if (j != k) e[idx++] = ea[j];
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::with_variable_inserted(int k) const {
    LaurentPoly out(nvars_ + 1);
    Exponents e(nvars_ + 1);
    for (const auto& [ea, c] : terms_) {
        int idx = 0;
        for (int j = 0; j <= nvars_; ++j)
            e[j] = (j == k) ? 0 : ea[idx++];
        out.terms_.emplace(e, c);
    }
    return out;
}

int LaurentPoly::min_exponent(int k) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[k] < m) m = e[k];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exponent(int k) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[k] > m) m = e[k];
        first = false;
    }
    return m;
}

Rational LaurentPoly::eval_rational(const std::vector<Rational>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int j = 0; j < nvars_; ++j) {
            int ex = e[j];
            if (ex == 0) continue;
            Rational p = point[j];
            if (ex < 0) {
                if (p == 0) throw WalkError(ErrorCode::BadInput, "pole in rational evaluation");
                p = 1 / p;
                ex = -ex;
            }
            for (int r = 0; r < ex; ++r) term *= p;
        }
        total += term;
    }
    return total;
}

GaussianRational LaurentPoly::eval_gaussian(const std::vector<GaussianRational>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    GaussianRational total;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = GaussianRational(c);
        for (int j = 0; j < nvars_; ++j)
            if (e[j] != 0) term = term * point[j].pow(e[j]);
        total = total + term;
    }
    return total;
}

Rational LaurentPoly::at_ones() const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::complex<double> LaurentPoly::eval_complex(const std::vector<std::complex<double>>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = to_double(c);
        for (int j = 0; j < nvars_; ++j) {
            int ex = e[j];
            if (ex == 0) continue;
            std::complex<double> p = point[j];
            if (ex < 0) {
                p = 1.0 / p;
                ex = -ex;
            }
            for (int r = 0; r < ex; ++r) term *= p;
        }
        total += term;
    }
    return total;
}

std::vector<std::string> LaurentPoly::default_names(int nvars, bool last_is_t) {
    std::vector<std::string> names;
    int zcount = last_is_t ? nvars - 1 : nvars;
    if (zcount <= 3) {
        const char* xyz[] = {"x", "y", "z"};
        for (int j = 0; j < zcount; ++j) names.emplace_back(xyz[j]);
    } else {
        for (int j = 0; j < zcount; ++j) names.push_back("z" + std::to_string(j + 1));
    }
    if (last_is_t) names.emplace_back("t");
    return names;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::string numer, denom;
        int denom_factors = 0;
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            std::string part = names[j];
            if (std::abs(e[j]) != 1) part += "^" + std::to_string(std::abs(e[j]));
            if (e[j] > 0) {
                if (!numer.empty()) numer += "*";
                numer += part;
            } else {
                if (!denom.empty()) denom += "*";
                denom += part;
                ++denom_factors;
            }
        }
        if (numer.empty() && denom.empty()) {
            os << rational_str(a);
        } else {
            if (numer.empty()) {
                os << rational_str(a);
            } else {
                if (a != 1) os << rational_str(a) << "*";
                os << numer;
            }
            if (!denom.empty())
                os << "/" << (denom_factors > 1 ? "(" + denom + ")" : denom);
        }
    }
    return os.str();
}

std::string LaurentPoly::str() const { return str(default_names(nvars_, false)); }

} // namespace walks

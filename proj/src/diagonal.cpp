#include "walks/diagonal.hpp"

#include <sstream>

#include "walks/errors.hpp"

namespace walks {

namespace {

// (1+z_1)...(1+z_k) in nvars variables
LaurentPoly one_plus_product(int nvars, int k) {
    LaurentPoly out = LaurentPoly::constant(nvars, 1);
    for (int j = 0; j < k; ++j) {
        LaurentPoly f = LaurentPoly::constant(nvars, 1);
        LaurentPoly::Exponents e(nvars, 0);
        e[j] = 1;
        f.add_term(e, 1);
        out = out * f;
    }
    return out;
}

// lifts a z-polynomial into d+1 variables and forms 1 - t*p
LaurentPoly one_minus_t_times(const LaurentPoly& p_z, int d) {
    LaurentPoly p = p_z.with_variable_inserted(d); // t exponent 0
    LaurentPoly::Exponents tshift(d + 1, 0);
    tshift[d] = 1;
    LaurentPoly out = LaurentPoly::constant(d + 1, 1);
    out -= p.shifted(tshift);
    return out;
}

void check_rep_invariants(const DiagonalRep& rep) {
    auto check = [&](const LaurentPoly& p, const char* what) {
        for (const auto& [e, c] : p.terms())
            for (int ex : e)
                if (ex < 0)
                    throw WalkError(ErrorCode::BadInput,
                                    std::string("negative exponent in ") + what);
    };
    check(rep.numerator_g, "numerator");
    for (const auto& h : rep.denominator_factors) {
        check(h, "denominator factor");
        if (h.constant_term() != 1)
            throw WalkError(ErrorCode::BadInput,
                            "denominator factor is not a unit at the origin");
    }
}

} // namespace

std::string DiagonalRep::canonical_str() const {
    auto names = LaurentPoly::default_names(dim + 1, true);
    std::ostringstream os;
    os << "G = " << numerator_g.str(names) << "\n";
    for (std::size_t i = 0; i < denominator_factors.size(); ++i)
        os << "H" << (i + 1) << " = " << denominator_factors[i].str(names) << "\n";
    return os.str();
}

DiagonalRep build_rep(const WalkModel& canonical_model) {
    Classification cls = classify(canonical_model);
    if (!cls.supported())
        throw WalkError(ErrorCode::UnsupportedClass,
                        "diagonal representation needs a highly or mostly symmetric model");
    if (cls.tag == SymmetryClass::MostlySymmetric && cls.asymmetric_axis != canonical_model.dimension() - 1)
        throw WalkError(ErrorCode::BadInput, "model must be in canonical axis order");
    if (cls.tag == SymmetryClass::MostlySymmetric) return build_rep_mostly(canonical_model);

    const int d = canonical_model.dimension();
    DiagonalRep rep;
    rep.dim = d;
    rep.mostly_symmetric = false;
    rep.g_hat = one_plus_product(d, d);

    // u = z_1...z_d S(z)
    LaurentPoly::Exponents ones(d, 1);
    rep.u = char_poly(canonical_model).shifted(ones);
    rep.w = LaurentPoly(d); // zero

    rep.numerator_g = rep.g_hat.with_variable_inserted(d);
    rep.denominator_factors.push_back(one_minus_t_times(rep.u, d));
    check_rep_invariants(rep);
    return rep;
}

DiagonalRep build_rep_mostly(const WalkModel& canonical_model) {
    const int d = canonical_model.dimension();
    AxisDecomposition dec = decompose(canonical_model);

    DiagonalRep rep;
    rep.dim = d;
    rep.mostly_symmetric = true;
    rep.g_hat = one_plus_product(d, d - 1);

    // all pieces as z-polynomials in d variables
    LaurentPoly a = dec.A.with_variable_inserted(d - 1);
    LaurentPoly q = dec.Q.with_variable_inserted(d - 1);
    LaurentPoly b = dec.B.with_variable_inserted(d - 1);

    LaurentPoly::Exponents zd(d, 0);
    zd[d - 1] = 1;
    LaurentPoly zd_a = a.shifted(zd);

    // Sbar = z_d A + Q + (1/z_d) B; z_1..z_d Sbar = z_1..z_{d-1} (z_d^2 A + z_d Q + B)
    LaurentPoly::Exponents ones(d, 1);
    LaurentPoly sbar = zd_a + q + b.shifted([&] {
        LaurentPoly::Exponents e(d, 0);
        e[d - 1] = -1;
        return e;
    }());
    rep.u = sbar.shifted(ones);
    rep.v = (q + zd_a).shifted(ones);
    rep.w = (q + zd_a.scaled(2)).shifted(ones);

    rep.numerator_g = rep.g_hat.with_variable_inserted(d) * one_minus_t_times(rep.w, d);

    LaurentPoly h1 = LaurentPoly::constant(d + 1, 1);
    LaurentPoly::Exponents e_zd(d + 1, 0);
    e_zd[d - 1] = 1;
    h1.add_term(e_zd, -1);
    rep.denominator_factors.push_back(h1);
    rep.denominator_factors.push_back(one_minus_t_times(rep.u, d));
    rep.denominator_factors.push_back(one_minus_t_times(rep.v, d));
    check_rep_invariants(rep);
    return rep;
}

std::vector<Rational> diagonal_coeffs(const DiagonalRep& rep, int max_n, int extra_degree,
                                      std::uint64_t term_cap) {
    const int d = rep.dim;
    const int cap_hat = max_n + 2 + extra_degree; // (1+z_j) and W raise by <= 2
    const int cap_zd = max_n + extra_degree;      // 1/(1-z_d) only raises z_d
    std::vector<int> caps(d, cap_hat);
    caps[d - 1] = cap_zd;

    auto guarded = [&](const LaurentPoly& p) {
        if (p.term_count() > term_cap)
            throw WalkError(ErrorCode::ResourceLimit,
                            "diagonal extraction exceeded the term cap");
        return p;
    };

    std::vector<Rational> out;
    out.reserve(max_n + 1);

    if (!rep.mostly_symmetric) {
        // [t^n] G/H = g_hat * u^n; diagonal coefficient is
        // sum over subsets of [d] of the matching coefficient of u^n.
        LaurentPoly upow = LaurentPoly::constant(d, 1);
        LaurentPoly u = rep.u.truncated(std::vector<int>(d, max_n + extra_degree));
        for (int n = 0; n <= max_n; ++n) {
            if (n > 0)
                upow = guarded((upow * u).truncated(std::vector<int>(d, max_n + extra_degree)));
            Rational total = 0;
            for (const auto& [e, c] : rep.g_hat.terms()) {
                LaurentPoly::Exponents want(d);
                bool feasible = true;
                for (int j = 0; j < d; ++j) {
                    want[j] = n - e[j];
                    if (want[j] < 0) { feasible = false; break; }
                }
                if (feasible) total += c * upow.coefficient(want);
            }
            out.push_back(total);
        }
        return out;
    }

    // Mostly symmetric: with U, V the t-linear denominator parts and W the
    // numerator t-part,
    //   [t^n] G/H = g_hat (R_n - W R_{n-1}) / (1 - z_d),
    // where R_n = sum_{a+b=n} U^a V^b satisfies
    //   R_n = (U+V) R_{n-1} - UV R_{n-2}.
    // The 1/(1-z_d) geometric series then lifts any z_d power <= n to n.
    LaurentPoly u = rep.u.truncated(caps);
    LaurentPoly v = rep.v.truncated(caps);
    LaurentPoly upv = u + v;
    LaurentPoly uv = (u * v).truncated(caps);

    LaurentPoly r_prev(d);                            // R_{-1} = 0
    LaurentPoly r_cur = LaurentPoly::constant(d, 1);  // R_0 = 1

    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) {
            LaurentPoly r_next = (upv * r_cur).truncated(caps);
            if (!r_prev.is_zero()) r_next -= (uv * r_prev).truncated(caps);
            r_prev = std::move(r_cur);
            r_cur = guarded(std::move(r_next));
        }
        LaurentPoly numer = r_cur;
        if (!rep.w.is_zero() && !r_prev.is_zero())
            numer -= (rep.w * r_prev).truncated(caps);
        LaurentPoly full = (rep.g_hat * numer).truncated(caps);

        // diagonal coefficient: hat-exponents exactly n, z_d exponent <= n
        Rational total = 0;
        for (const auto& [e, c] : full.terms()) {
            bool hat_ok = true;
            for (int j = 0; j + 1 < d; ++j)
                if (e[j] != n) { hat_ok = false; break; }
            if (hat_ok && e[d - 1] <= n) total += c;
        }
        out.push_back(total);
    }
    return out;
}

VerifyReport verify_rep(const DiagonalRep& rep, const CountSequence& oracle, int max_n) {
    std::vector<Rational> diag = diagonal_coeffs(rep, max_n);
    VerifyReport report;
    report.checked_up_to = max_n;
    for (int n = 0; n <= max_n; ++n) {
        if (diag[n] != oracle.exact_value(n)) {
            report.agree = false;
            report.first_mismatch = n;
            break;
        }
    }
    return report;
}

VerifyReport verify_rep(const WalkModel& model, int max_n) {
    Classification cls = classify(model);
    if (!cls.supported())
        throw WalkError(ErrorCode::UnsupportedClass,
                        "verification needs a highly or mostly symmetric model");
    DiagonalRep rep = build_rep(*cls.canonical);
    CountSequence oracle = count_walks(*cls.canonical, max_n, ArithmeticMode::Exact);
    return verify_rep(rep, oracle, max_n);
}

} // namespace walks

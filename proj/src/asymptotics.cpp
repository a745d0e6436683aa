#include "walks/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "walks/errors.hpp"

namespace walks {

namespace {

const double kPi = 3.14159265358979323846;

ClassifiedModel require_supported(const WalkModel& model) {
    return classify_and_decompose(model);
}

// product b_1..b_k as a rational
Rational product(const std::vector<Rational>& v, std::size_t k) {
    Rational p = 1;
    for (std::size_t j = 0; j < k; ++j) p *= v[j];
    return p;
}

// B_k(1,...,1,rho) as an element of Q(sqrt(A/B)): group the sectional by
// its z_d exponent (the last variable) and substitute.
SurdExpr eval_sectional_at_rho(const LaurentPoly& sectional, const SurdExpr& rho,
                               const SurdExpr& rho_inv) {
    const int nv = sectional.variables();
    SurdExpr total{Rational(0)};
    Rational c_minus = 0, c_zero = 0, c_plus = 0;
    for (const auto& [e, c] : sectional.terms()) {
        int zd = e[nv - 1];
        if (zd == -1) c_minus += c;
        else if (zd == 0) c_zero += c;
        else if (zd == 1) c_plus += c;
        else throw WalkError(ErrorCode::BadInput, "unexpected exponent in sectional");
    }
    total = total + SurdExpr(c_zero);
    total = total + SurdExpr(c_plus) * rho;
    total = total + SurdExpr(c_minus) * rho_inv;
    return total;
}

SurdExpr negdrift_constant(int d, const Rational& a1, const Rational& b1,
                           const Rational& q1,
                           const std::vector<LaurentPoly>& sectionals, bool negative_root) {
    // rho = +-sqrt(A(1)/B(1)); everything lives in Q(sqrt(A(1) B(1)))
    SurdExpr rho = SurdExpr::sqrt_of(a1 / b1);
    if (negative_root) rho = -rho;
    SurdExpr rho_inv = SurdExpr(Rational(1)) / rho;

    // S(1, rho) = A/rho + Q + rho B
    SurdExpr s_at_rho = SurdExpr(a1) * rho_inv + SurdExpr(q1) + SurdExpr(b1) * rho;

    // prefactor S(1,rho) rho / (2 pi^{d/2} A(1) (1 - 1/rho)^2)
    SurdExpr one{Rational(1)};
    SurdExpr denom_sq = (one - rho_inv) * (one - rho_inv);
    SurdExpr pre = (s_at_rho * rho) / (SurdExpr(Rational(2) * a1) * denom_sq);

    // radicand S(1,rho)^d / (rho B_1(1,rho)...B_{d-1}(1,rho) B(1))
    SurdExpr num = one;
    for (int j = 0; j < d; ++j) num = num * s_at_rho;
    SurdExpr den = rho * SurdExpr(b1);
    for (const auto& sec : sectionals) den = den * eval_sectional_at_rho(sec, rho, rho_inv);
    SurdExpr radicand = num / den;

    SurdExpr c = pre * radicand.sqrt();
    return c.with_pi_half(-d);
}

} // namespace

const char* theorem_tag_name(TheoremTag t) {
    switch (t) {
        case TheoremTag::HighlySymmetric: return "highly-symmetric";
        case TheoremTag::PositiveDrift: return "positive-drift";
        case TheoremTag::NegativeDrift: return "negative-drift";
        case TheoremTag::ZeroDrift: return "zero-drift";
    }
    return "unknown";
}

AsymptoticPrediction predict(const WalkModel& model) {
    ClassifiedModel cm = require_supported(model);
    const int d = model.dimension();
    const Rational s1 = model.total_weight();
    const std::vector<Rational>& b = cm.dec.forward_weights;

    AsymptoticPrediction out;
    out.total_weight = s1;
    out.dimension = d;

    auto s1_expr = SurdExpr(s1);

    if (cm.cls.tag == SymmetryClass::HighlySymmetric ||
        cm.cls.drift_sign == DriftSign::Zero) {
        // s_n ~ S(1)^n n^{-d/2} S(1)^{d/2} / (pi^{d/2} sqrt(b_1..b_d));
        // the highly symmetric constant is the same expression
        out.theorem = cm.cls.tag == SymmetryClass::HighlySymmetric
                          ? TheoremTag::HighlySymmetric
                          : TheoremTag::ZeroDrift;
        SurdExpr c = SurdExpr::sqrt_of(Rational(1) / product(b, d));
        for (int j = 0; j < d; ++j) c = c * s1_expr.sqrt();
        c = c.with_pi_half(-d);
        ClassPrediction cp;
        cp.residue = 0;
        cp.base = to_double(s1);
        cp.base_exact = s1_expr;
        cp.order_exponent = Rational(d, 2);
        cp.constant_exact = c;
        cp.constant = c.value();
        out.classes.push_back(std::move(cp));
        out.second_order = second_order_main(model);
        return out;
    }

    Rational a1 = cm.dec.A.at_ones();
    Rational b1 = cm.dec.B.at_ones();
    Rational q1 = cm.dec.Q.at_ones();

    if (cm.cls.drift_sign == DriftSign::Positive) {
        out.theorem = TheoremTag::PositiveDrift;
        // (S(1)/pi)^{(d-1)/2} (B(1)-A(1)) / (B(1) sqrt(b_1..b_{d-1}))
        SurdExpr c = SurdExpr((b1 - a1) / b1) *
                     SurdExpr::sqrt_of(Rational(1) / product(b, d - 1));
        for (int j = 0; j + 1 < d; ++j) c = c * s1_expr.sqrt();
        c = c.with_pi_half(-(d - 1));
        ClassPrediction cp;
        cp.residue = 0;
        cp.base = to_double(s1);
        cp.base_exact = s1_expr;
        cp.order_exponent = Rational(d - 1, 2);
        cp.constant_exact = c;
        cp.constant = c.value();
        out.classes.push_back(std::move(cp));
        return out;
    }

    // negative drift
    out.theorem = TheoremTag::NegativeDrift;
    SurdExpr c_pos = negdrift_constant(d, a1, b1, q1, cm.dec.sectionals, false);
    // base S(1,rho) = Q(1) + 2 sqrt(A(1) B(1))
    SurdExpr base = SurdExpr(q1) + SurdExpr(Rational(2)) * SurdExpr::sqrt_of(a1 * b1);
    Rational order(d + 2, 2); // d/2 + 1

    if (q1 != 0) {
        ClassPrediction cp;
        cp.residue = 0;
        cp.base_exact = base;
        cp.base = base.value();
        cp.order_exponent = order;
        cp.constant_exact = c_pos;
        cp.constant = c_pos.value();
        out.classes.push_back(std::move(cp));
        return out;
    }

    // Q = 0: period 2, per-parity constants C_rho + C_{-rho} and C_rho - C_{-rho}
    out.period = 2;
    SurdExpr c_neg = negdrift_constant(d, a1, b1, q1, cm.dec.sectionals, true);
    for (int residue = 0; residue < 2; ++residue) {
        ClassPrediction cp;
        cp.residue = residue;
        cp.base_exact = base;
        cp.base = base.value();
        cp.order_exponent = order;
        cp.constant_exact = residue == 0 ? c_pos + c_neg : c_pos - c_neg;
        cp.constant = cp.constant_exact.value();
        out.classes.push_back(std::move(cp));
    }
    return out;
}

GammaSet gamma_set(const WalkModel& model) {
    ClassifiedModel cm = require_supported(model);
    const WalkModel& canonical = *cm.cls.canonical;
    const int d = canonical.dimension();
    const Rational s1 = canonical.total_weight();
    const Rational s1_sq = s1 * s1;

    LaurentPoly s = char_poly(canonical);
    LaurentPoly sbar = s.reflected(d - 1); // S(z_1..z_{d-1}, 1/z_d)

    const GaussianRational plus_one(Rational(1));
    const GaussianRational minus_one(Rational(-1));
    const std::vector<GaussianRational> last_choices = {
        plus_one, minus_one, GaussianRational::i(),
        GaussianRational(Rational(0), Rational(-1))};

    GammaSet out;
    for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
        for (const auto& wd : last_choices) {
            std::vector<GaussianRational> w;
            for (int j = 0; j + 1 < d; ++j)
                w.push_back((mask >> j) & 1 ? minus_one : plus_one);
            w.push_back(wd);

            GaussianRational sb = sbar.eval_gaussian(w);
            GaussianRational prod = GaussianRational::one();
            for (const auto& wj : w) prod = prod * wj;
            GaussianRational full = prod * sb;
            if (full.norm2() != s1_sq) continue;

            GammaPoint pt;
            pt.w = w;
            pt.t_coordinate = full.inverse();
            pt.base_exact = sb;
            pt.base_value = sb.to_complex();
            bool hat_all_one = mask == 0;
            if (hat_all_one && wd == plus_one)
                pt.order = GammaPoint::Order::Leading;
            else if (wd == plus_one)
                pt.order = GammaPoint::Order::SuppressedNumerator;
            else
                pt.order = GammaPoint::Order::SuppressedSmooth;
            out.points.push_back(std::move(pt));
        }
    }

    // least p with base^p positive real across leading-order members
    for (int p = 1; p <= 4; ++p) {
        bool ok = true;
        for (const auto& pt : out.points) {
            if (pt.order != GammaPoint::Order::Leading) continue;
            GaussianRational powed = pt.base_exact.pow(p);
            if (!(powed.is_real() && powed.re > 0)) { ok = false; break; }
        }
        if (ok) { out.period = p; break; }
    }
    return out;
}

SaddleData saddle_data(const WalkModel& model) {
    ClassifiedModel cm = require_supported(model);
    const WalkModel& canonical = *cm.cls.canonical;
    const int d = canonical.dimension();
    const Rational s1 = canonical.total_weight();

    SaddleData out;
    for (int j = 0; j < d; ++j)
        out.c.push_back(cm.dec.forward_weights[j] / s1);
    for (int j = 0; j + 1 < d; ++j) {
        Rational a = 0, b = 0;
        for (const auto& [vec, wgt] : canonical.steps()) {
            if (vec[j] == 0) continue;
            if (vec[d - 1] == -1) a += wgt;
            if (vec[d - 1] == 1) b += wgt;
        }
        out.alpha.push_back(a / 2);
        out.beta.push_back(b / 2);
    }
    out.amplitude_at_center = 1;
    for (int j = 0; j < d; ++j) out.amplitude_at_center *= 2;

    // internal consistency: central finite differences of log Sbar(e^{i theta})
    // must reproduce -2 c_j, and of A, B the -2 alpha_j / -2 beta_j
    LaurentPoly sbar = char_poly(canonical).reflected(d - 1);
    const AxisDecomposition& dec = cm.dec;
    const double h = 1e-4;
    auto second_diff = [&](const LaurentPoly& p, int var, int nvars) {
        std::vector<std::complex<double>> zp(nvars, 1.0), zm(nvars, 1.0), z0(nvars, 1.0);
        zp[var] = std::exp(std::complex<double>(0, h));
        zm[var] = std::exp(std::complex<double>(0, -h));
        std::complex<double> fp = std::log(p.eval_complex(zp));
        std::complex<double> fm = std::log(p.eval_complex(zm));
        std::complex<double> f0 = std::log(p.eval_complex(z0));
        return ((fp - 2.0 * f0 + fm) / (h * h)).real();
    };
    // Along the symmetric axes the second derivative is -2 b_j / S(1); on
    // the distinguished axis the drift enters:
    //   g''_d(0) = -(A-B)/S - 2B/S + (A-B)^2/S^2,
    // which reduces to -2 b_d / S(1) exactly when the drift vanishes.
    Rational a1 = dec.A.at_ones(), b1v = dec.B.at_ones();
    for (int j = 0; j < d; ++j) {
        Rational want_exact;
        if (j + 1 < d) {
            want_exact = Rational(-2 * out.c[j]);
        } else {
            Rational diff = a1 - b1v;
            want_exact = Rational(-diff / s1 - 2 * b1v / s1 + diff * diff / (s1 * s1));
        }
        double got = second_diff(sbar, j, d);
        if (std::abs(got - to_double(want_exact)) > 1e-6)
            throw WalkError(ErrorCode::BadInput,
                            "saddle Hessian self-check failed in coordinate " +
                                std::to_string(j + 1));
    }
    auto curvature_check = [&](const LaurentPoly& part, const std::vector<Rational>& target) {
        // A and B are Laurent polynomials in the d-1 hat variables
        for (int j = 0; j + 1 < d; ++j) {
            std::vector<std::complex<double>> zp(d - 1, 1.0), zm(d - 1, 1.0), z0(d - 1, 1.0);
            zp[j] = std::exp(std::complex<double>(0, h));
            zm[j] = std::exp(std::complex<double>(0, -h));
            double got = ((part.eval_complex(zp) - 2.0 * part.eval_complex(z0) +
                           part.eval_complex(zm)) /
                          (h * h))
                             .real();
            if (std::abs(got + 2.0 * to_double(target[j])) > 1e-6)
                throw WalkError(ErrorCode::BadInput, "amplitude curvature self-check failed");
        }
    };
    curvature_check(dec.A, out.alpha);
    curvature_check(dec.B, out.beta);
    return out;
}

SaddleData saddle_data(const WalkModel& model, const GammaPoint&) {
    // the quadratic expansion is the same at every Gamma point
    return saddle_data(model);
}

SecondOrderTerm second_order_main(const WalkModel& model) {
    ClassifiedModel cm = require_supported(model);
    if (cm.cls.drift_sign != DriftSign::Zero)
        throw WalkError(ErrorCode::NonZeroDrift,
                        "second-order term is defined for zero-drift models");
    const int d = model.dimension();
    SaddleData sd = saddle_data(model);
    Rational b1 = cm.dec.forward_weights[d - 1]; // B(1)

    // kappa = [sum_j (alpha_j - beta_j) / (2 c_j)]
    //         / (2 B(1) sqrt(prod_{k<d} c_k)) * pi^{(1-d)/2}
    Rational sum = 0;
    for (int j = 0; j + 1 < d; ++j)
        sum += (sd.alpha[j] - sd.beta[j]) / (2 * sd.c[j]);

    SecondOrderTerm out;
    out.main_term_only = true;
    if (sum == 0) {
        out.kappa_exact = SurdExpr(Rational(0));
        out.kappa = 0;
        return out;
    }
    Rational prod_c = product(sd.c, d - 1);
    SurdExpr k = SurdExpr(sum / (2 * b1)) * SurdExpr::sqrt_of(Rational(1) / prod_c);
    k = k.with_pi_half(1 - d);
    out.kappa_exact = k;
    out.kappa = k.value();
    return out;
}

void QuadratureSpec::validate() const {
    Rational a = epsilon_exponent, bq = delta_exponent;
    bool ok = a > Rational(1, 2) && a < 2 * bq && a + bq > 1 && bq > Rational(1, 3) &&
              bq < Rational(1, 2);
    if (!ok)
        throw WalkError(ErrorCode::BadInput,
                        "contour exponents must satisfy 1/2 < a < 2b, a + b > 1, 1/3 < b < 1/2");
}

double QuadratureSpec::epsilon(int n) const {
    return epsilon_scale * std::pow(n, -to_double(epsilon_exponent));
}

double QuadratureSpec::delta(int n) const {
    return delta_scale * std::pow(n, -to_double(delta_exponent));
}

int QuadratureSpec::nodes(int n) const {
    if (nodes_per_axis > 0) return nodes_per_axis;
    return std::max(201, static_cast<int>(std::ceil(20.0 * std::sqrt(double(n)))));
}

ResidueEstimate residue_integral_estimate(const WalkModel& model, int n,
                                          const QuadratureSpec& spec,
                                          const CountSequence* oracle) {
    spec.validate();
    ClassifiedModel cm = require_supported(model);
    const WalkModel& canonical = *cm.cls.canonical;
    const int d = canonical.dimension();

    const double eps = spec.epsilon(n);
    const double delta = spec.delta(n);
    const int nodes = spec.nodes(n);
    if (nodes < 2) throw WalkError(ErrorCode::BadInput, "need at least two nodes per axis");

    // neighborhood arcs must be disjoint: hat coords are +-1 (spacing pi),
    // the last coordinate ranges over {1,-1,i,-i} (spacing pi/2)
    if (delta >= kPi / 4)
        throw WalkError(ErrorCode::BadInput,
                        "delta too large for disjoint neighborhoods; increase n");
    double spacing = 2.0 * delta / (nodes - 1);
    if (spacing > 1.0 / n)
        throw WalkError(ErrorCode::QuadratureUnderResolved,
                        "node spacing exceeds the integrand oscillation scale 1/n");

    GammaSet gamma = gamma_set(model);
    AxisDecomposition dec = cm.dec;

    // trapezoid nodes and weights on [-delta, delta]
    std::vector<double> theta(nodes), wq(nodes, spacing);
    for (int i = 0; i < nodes; ++i) theta[i] = -delta + spacing * i;
    wq.front() *= 0.5;
    wq.back() *= 0.5;

    LaurentPoly sbar = char_poly(canonical).reflected(d - 1);

    ResidueEstimate out;
    double total = 0;
    for (const auto& pt : gamma.points) {
        std::vector<std::complex<double>> wc(d);
        for (int j = 0; j < d; ++j) wc[j] = pt.w[j].to_complex();

        // tensor-product sum over theta in [-delta,delta]^d
        std::vector<int> idx(d, 0);
        std::complex<double> acc = 0.0;
        std::vector<std::complex<double>> z(d), zhat(d - 1);
        while (true) {
            double weight = 1.0;
            for (int j = 0; j < d; ++j) weight *= wq[idx[j]];
            for (int j = 0; j < d; ++j) {
                z[j] = wc[j] * std::exp(std::complex<double>(0, theta[idx[j]]));
                if (j == d - 1) z[j] *= (1.0 - eps);
            }
            for (int j = 0; j + 1 < d; ++j) zhat[j] = z[j];

            std::complex<double> a_val = dec.A.eval_complex(zhat);
            std::complex<double> b_val = dec.B.eval_complex(zhat);
            std::complex<double> zd = z[d - 1];
            std::complex<double> numer = 1.0;
            for (int j = 0; j + 1 < d; ++j) numer *= (1.0 + z[j]);
            std::complex<double> amp =
                numer / b_val * (b_val - zd * zd * a_val) / (1.0 - zd);
            std::complex<double> sval = sbar.eval_complex(z);
            acc += weight * amp * std::pow(sval, n);

            int j = 0;
            while (j < d && ++idx[j] == nodes) idx[j++] = 0;
            if (j == d) break;
        }
        std::complex<double> contrib = acc / std::pow(2.0 * kPi, d);
        out.per_point.push_back(contrib);
        total += contrib.real();
    }
    out.estimate = total;
    if (oracle) {
        double sn = oracle->value(n);
        out.relative_error_vs_oracle = std::abs(out.estimate - sn) / sn;
    }
    return out;
}

} // namespace walks

#ifndef WALKS_ASYMPTOTICS_HPP
#define WALKS_ASYMPTOTICS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "walks/enumerate.hpp"
#include "walks/model.hpp"
#include "walks/surd.hpp"

namespace walks {

enum class TheoremTag { HighlySymmetric, PositiveDrift, NegativeDrift, ZeroDrift };
const char* theorem_tag_name(TheoremTag t);

// s_n ~ constant * base^n * n^(-order) on each residue class mod period.
struct ClassPrediction {
    int residue = 0;
    double base = 0;
    SurdExpr base_exact;
    Rational order_exponent; // d/2, (d-1)/2 or d/2+1
    double constant = 0;
    SurdExpr constant_exact;
};

struct SecondOrderTerm {
    double kappa = 0;
    SurdExpr kappa_exact;
    // the all-ones saddle contribution only; other torus points can enter
    // at the same order
    bool main_term_only = true;
};

struct AsymptoticPrediction {
    TheoremTag theorem = TheoremTag::HighlySymmetric;
    int period = 1;
    std::vector<ClassPrediction> classes;
    std::optional<SecondOrderTerm> second_order;
    Rational total_weight; // S(1)
    int dimension = 0;
};

AsymptoticPrediction predict(const WalkModel& model);

// Points of the critical set Gamma: torus points sharing the coordinate-wise
// modulus of the dominant singularity of H_2.
struct GammaPoint {
    std::vector<GaussianRational> w; // entries of hat-w in {+-1}, w_d in {+-1,+-i}
    GaussianRational t_coordinate;   // 1/(w_1...w_d Sbar(w)); |t| = 1/S(1)
    GaussianRational base_exact;     // Sbar(w)
    std::complex<double> base_value;

    enum class Order {
        Leading,             // the all-ones point, order n^(-d/2)
        SuppressedNumerator, // some hat coordinate is -1: o(n^(-d/2))
        SuppressedSmooth,    // w_d in {-1,+-i}: O(n^(-(d+1)/2))
    };
    Order order = Order::Leading;
};

struct GammaSet {
    std::vector<GammaPoint> points;
    int period = 1; // least p with Sbar(w)^p positive real on leading points
};

GammaSet gamma_set(const WalkModel& model);

// Quadratic saddle data of log Sbar(e^{i theta}) at the all-ones point plus
// the amplitude curvature split between the backward (alpha) and forward
// (beta) step layers.
struct SaddleData {
    std::vector<Rational> c;     // c_j = b_j / S(1), j = 1..d
    std::vector<Rational> alpha; // j = 1..d-1
    std::vector<Rational> beta;  // j = 1..d-1
    Rational amplitude_at_center; // 2^d
};

SaddleData saddle_data(const WalkModel& model);
SaddleData saddle_data(const WalkModel& model, const GammaPoint& w);

// Coefficient kappa of S(1)^n n^(-(d+1)/2) contributed by the all-ones
// point, in closed form. Requires zero drift.
SecondOrderTerm second_order_main(const WalkModel& model);

struct QuadratureSpec {
    int nodes_per_axis = 0;          // 0: max(201, ceil(20 sqrt(n)))
    Rational epsilon_exponent{7, 10};
    Rational delta_exponent{2, 5};
    double delta_scale = 2.0;        // constant factor on delta = n^-2/5
    double epsilon_scale = 1.0;

    void validate() const; // running assumptions on the exponents
    double epsilon(int n) const;
    double delta(int n) const;
    int nodes(int n) const;
};

struct ResidueEstimate {
    double estimate = 0;
    std::optional<double> relative_error_vs_oracle;
    std::vector<std::complex<double>> per_point; // one value per Gamma point
};

// Numerical tensor-product trapezoid quadrature of the residue integral
// over the product-of-arcs neighborhoods of every Gamma point.
ResidueEstimate residue_integral_estimate(const WalkModel& model, int n,
                                          const QuadratureSpec& spec = {},
                                          const CountSequence* oracle = nullptr);

} // namespace walks

#endif

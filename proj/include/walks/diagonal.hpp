#ifndef WALKS_DIAGONAL_HPP
#define WALKS_DIAGONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "walks/enumerate.hpp"
#include "walks/model.hpp"

namespace walks {

// Rational diagonal representation of the walk generating function:
// W(t) = diag G / (H_1 H_2 ...) in the variables z_1..z_d, t.
//
// Highly symmetric:  G = (1+z_1)...(1+z_d),
//                    H = 1 - t (z_1...z_d) S(z).
// Mostly symmetric:  G  = (1+z_1)...(1+z_{d-1}) (1 - t z_1...z_d (Q + 2 z_d A)),
//                    H1 = 1 - z_d,
//                    H2 = 1 - t z_1...z_d Sbar(z),
//                    H3 = 1 - t z_1...z_d (Q + z_d A),
// with Sbar(z) = S(z_1,...,z_{d-1},1/z_d).
struct DiagonalRep {
    int dim = 0;                  // d; polynomials live in d+1 variables (t last)
    bool mostly_symmetric = false;
    LaurentPoly numerator_g;                  // expanded, exponents >= 0
    std::vector<LaurentPoly> denominator_factors;

    // structural pieces used by the extraction (polynomials in z only):
    LaurentPoly g_hat; // product of (1+z_j)
    LaurentPoly u;     // H with t: 1 - t*u  (u = z_1..z_d * Sbar, or * S)
    LaurentPoly v;     // second t-linear factor (mostly symmetric only)
    LaurentPoly w;     // numerator t-part: G = g_hat * (1 - t*w)

    std::string canonical_str() const; // canonical text of G and each H_i
};

// Requires a supported model in canonical axis order.
DiagonalRep build_rep(const WalkModel& canonical_model);

// Forces the Eq-2-shaped representation even for highly symmetric models
// (any axis serves as the distinguished one).
DiagonalRep build_rep_mostly(const WalkModel& canonical_model);

// [z_1^n...z_d^n t^n] G/H for n = 0..max_n, exactly. extra_degree pads the
// per-variable truncation cap (the default is already sound; the pad is for
// truncation-soundness checks).
std::vector<Rational> diagonal_coeffs(const DiagonalRep& rep, int max_n,
                                      int extra_degree = 0,
                                      std::uint64_t term_cap = 1ull << 24);

struct VerifyReport {
    bool agree = true;
    std::optional<int> first_mismatch;
    int checked_up_to = 0;
};

// diagonal_coeffs(build_rep(model)) == count_walks(model) for n <= max_n?
VerifyReport verify_rep(const WalkModel& model, int max_n = 15);
VerifyReport verify_rep(const DiagonalRep& rep, const CountSequence& oracle, int max_n);

} // namespace walks

#endif

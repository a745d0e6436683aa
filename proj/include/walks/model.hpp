#ifndef WALKS_MODEL_HPP
#define WALKS_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walks/laurent.hpp"
#include "walks/rational.hpp"

namespace walks {

using StepVector = std::vector<int>;

// A weighted short-step model on N^d: steps in {-1,0,1}^d \ {0} with
// strictly positive rational weights, moving forwards and backwards in
// every coordinate. Immutable once constructed.
class WalkModel {
public:
    // Validates all invariants; duplicate step vectors are merged by
    // adding their weights.
    WalkModel(int dimension, const std::vector<std::pair<StepVector, Rational>>& steps);

    int dimension() const { return dim_; }
    const std::map<StepVector, Rational>& steps() const { return steps_; }
    std::size_t step_count() const { return steps_.size(); }

    Rational total_weight() const; // S(1)
    // Total weight of steps moving forward in coordinate k (0-based).
    Rational forward_weight(int k) const;

    WalkModel permuted(const std::vector<int>& perm) const; // axis j -> perm[j]
    WalkModel reflected(int k) const;
    WalkModel scaled(const Rational& factor) const;

    // Weighted step multiset unchanged by reflection over axis k?
    bool symmetric_over(int k) const;

    std::string canonical_str() const;
    std::uint64_t fingerprint() const; // FNV-1a of the canonical form

    friend bool operator==(const WalkModel& a, const WalkModel& b) {
        return a.dim_ == b.dim_ && a.steps_ == b.steps_;
    }

private:
    int dim_;
    std::map<StepVector, Rational> steps_;
};

// Model description as consumed from JSON documents
// {"dimension": d, "steps": [{"vector": [...], "weight": "p/q"}, ...]}.
struct ModelSpec {
    int dimension = 0;
    std::vector<std::pair<StepVector, std::string>> steps;
};

WalkModel parse_and_validate(const ModelSpec& spec);
WalkModel parse_model_json(const std::string& json_text);
std::string model_to_json(const WalkModel& model);

// S(z) = sum of w_i z^i.
LaurentPoly char_poly(const WalkModel& model);

enum class SymmetryClass { HighlySymmetric, MostlySymmetric, Unsupported };

enum class DriftSign { Negative, Zero, Positive };

struct Classification {
    SymmetryClass tag = SymmetryClass::Unsupported;
    // Permutation applied to reach the canonical model: axis j of the input
    // becomes axis permutation[j] of the canonical model. Identity unless
    // MostlySymmetric with the asymmetric axis off position d.
    std::vector<int> permutation;
    // 0-based index of the asymmetric axis in the *input* model
    // (MostlySymmetric only).
    int asymmetric_axis = -1;
    Rational drift;               // B(1) - A(1) of the canonical model
    DriftSign drift_sign = DriftSign::Zero;
    std::string unsupported_reason;
    // Input model with the asymmetric axis permuted to the last position.
    std::optional<WalkModel> canonical;

    bool supported() const { return tag != SymmetryClass::Unsupported; }
};

Classification classify(const WalkModel& model);

struct AxisDecomposition {
    // Sections of S by the exponent of z_d; Laurent polynomials in
    // z_1..z_{d-1}.
    LaurentPoly A, Q, B;
    // B_k = [z_k] S for k = 1..d-1, in the d-1 variables z_1..ẑ_k..z_d
    // (z_d last).
    std::vector<LaurentPoly> sectionals;
    std::vector<Rational> forward_weights; // b_1..b_d
};

// Requires a supported model in canonical axis order (classify first);
// for highly symmetric models any axis may serve as the distinguished one.
AxisDecomposition decompose(const WalkModel& canonical_model);

// Convenience: classify, then decompose the canonical model.
struct ClassifiedModel {
    WalkModel model;
    Classification cls;
    AxisDecomposition dec;
};
ClassifiedModel classify_and_decompose(const WalkModel& model);

const char* symmetry_class_name(SymmetryClass c);
const char* drift_sign_name(DriftSign s);

} // namespace walks

#endif

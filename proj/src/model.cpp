#include "walks/model.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "walks/errors.hpp"

namespace walks {

using json = nlohmann::ordered_json;

WalkModel::WalkModel(int dimension, const std::vector<std::pair<StepVector, Rational>>& steps)
    : dim_(dimension) {
    if (dimension < 1)
        throw WalkError(ErrorCode::BadInput, "dimension must be positive");
    for (const auto& [vec, w] : steps) {
        if (static_cast<int>(vec.size()) != dim_)
            throw WalkError(ErrorCode::BadInput, "step vector length does not match dimension");
        bool all_zero = true;
        for (int e : vec) {
            if (e < -1 || e > 1)
                throw WalkError(ErrorCode::EntryOutOfRange,
                                "step entries must lie in {-1,0,1}");
            if (e != 0) all_zero = false;
        }
        if (all_zero) throw WalkError(ErrorCode::ZeroStep, "zero step is not allowed");
        if (w <= 0)
            throw WalkError(ErrorCode::NonPositiveWeight, "step weights must be positive");
        steps_[vec] += w;
    }
    // merging opposite-signed duplicates cannot occur (weights positive),
    // but a fully cancelled map would mean no steps at all
    for (int k = 0; k < dim_; ++k) {
        bool fwd = false, bwd = false;
        for (const auto& [vec, w] : steps_) {
            if (vec[k] == 1) fwd = true;
            if (vec[k] == -1) bwd = true;
        }
        if (!fwd || !bwd)
            throw WalkError(ErrorCode::MissingForwardOrBackwardStep,
                            "no " + std::string(fwd ? "backward" : "forward") +
                                " step in coordinate " + std::to_string(k + 1),
                            k + 1);
    }
}

Rational WalkModel::total_weight() const {
    Rational s = 0;
    for (const auto& [vec, w] : steps_) s += w;
    return s;
}

Rational WalkModel::forward_weight(int k) const {
    Rational s = 0;
    for (const auto& [vec, w] : steps_)
        if (vec[k] == 1) s += w;
    return s;
}

WalkModel WalkModel::permuted(const std::vector<int>& perm) const {
    std::vector<std::pair<StepVector, Rational>> out;
    for (const auto& [vec, w] : steps_) {
        StepVector nv(dim_);
        for (int j = 0; j < dim_; ++j) nv[perm[j]] = vec[j];
        out.emplace_back(std::move(nv), w);
    }
    return WalkModel(dim_, out);
}

WalkModel WalkModel::reflected(int k) const {
    std::vector<std::pair<StepVector, Rational>> out;
    for (const auto& [vec, w] : steps_) {
        StepVector nv = vec;
        nv[k] = -nv[k];
        out.emplace_back(std::move(nv), w);
    }
    return WalkModel(dim_, out);
}

WalkModel WalkModel::scaled(const Rational& factor) const {
    if (factor <= 0)
        throw WalkError(ErrorCode::NonPositiveWeight, "scale factor must be positive");
    std::vector<std::pair<StepVector, Rational>> out;
    for (const auto& [vec, w] : steps_) out.emplace_back(vec, w * factor);
    return WalkModel(dim_, out);
}

bool WalkModel::symmetric_over(int k) const {
    for (const auto& [vec, w] : steps_) {
        StepVector r = vec;
        r[k] = -r[k];
        auto it = steps_.find(r);
        if (it == steps_.end() || it->second != w) return false;
    }
    return true;
}

std::string WalkModel::canonical_str() const {
    std::ostringstream os;
    os << "d=" << dim_ << ";";
    for (const auto& [vec, w] : steps_) {
        os << "(";
        for (int j = 0; j < dim_; ++j) {
            if (j) os << ",";
            os << vec[j];
        }
        os << "):" << rational_str(w) << ";";
    }
    return os.str();
}

std::uint64_t WalkModel::fingerprint() const {
    // FNV-1a
    std::uint64_t h = 14695981039346656037ull;
    for (char c : canonical_str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

WalkModel parse_and_validate(const ModelSpec& spec) {
    std::vector<std::pair<StepVector, Rational>> steps;
    steps.reserve(spec.steps.size());
    for (const auto& [vec, wtext] : spec.steps)
        steps.emplace_back(vec, parse_rational(wtext));
    return WalkModel(spec.dimension, steps);
}

WalkModel parse_model_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw WalkError(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("steps"))
        throw WalkError(ErrorCode::BadInput,
                        "model document needs \"dimension\" and \"steps\"");
    ModelSpec spec;
    if (!doc["dimension"].is_number_integer())
        throw WalkError(ErrorCode::BadInput, "\"dimension\" must be an integer");
    spec.dimension = doc["dimension"].get<int>();
    if (!doc["steps"].is_array())
        throw WalkError(ErrorCode::BadInput, "\"steps\" must be an array");
    for (const auto& st : doc["steps"]) {
        if (!st.is_object() || !st.contains("vector") || !st.contains("weight"))
            throw WalkError(ErrorCode::BadInput,
                            "each step needs \"vector\" and \"weight\"");
        StepVector v;
        for (const auto& e : st["vector"]) {
            if (!e.is_number_integer())
                throw WalkError(ErrorCode::BadInput, "step vector entries must be integers");
            v.push_back(e.get<int>());
        }
        std::string w;
        if (st["weight"].is_string()) w = st["weight"].get<std::string>();
        else if (st["weight"].is_number_integer())
            w = std::to_string(st["weight"].get<long long>());
        else
            throw WalkError(ErrorCode::BadInput,
                            "weights must be fraction/decimal strings (or integers)");
        spec.steps.emplace_back(std::move(v), std::move(w));
    }
    return parse_and_validate(spec);
}

std::string model_to_json(const WalkModel& model) {
    json doc;
    doc["dimension"] = model.dimension();
    doc["steps"] = json::array();
    for (const auto& [vec, w] : model.steps()) {
        json st;
        st["vector"] = vec;
        st["weight"] = rational_str(w);
        doc["steps"].push_back(st);
    }
    return doc.dump(2);
}

LaurentPoly char_poly(const WalkModel& model) {
    LaurentPoly s(model.dimension());
    for (const auto& [vec, w] : model.steps()) s.add_term(vec, w);
    return s;
}

Classification classify(const WalkModel& model) {
    const int d = model.dimension();
    Classification out;
    out.permutation.resize(d);
    for (int j = 0; j < d; ++j) out.permutation[j] = j;

    std::vector<int> asym;
    for (int k = 0; k < d; ++k)
        if (!model.symmetric_over(k)) asym.push_back(k);

    if (asym.empty()) {
        out.tag = SymmetryClass::HighlySymmetric;
        out.drift = 0;
        out.drift_sign = DriftSign::Zero;
        out.canonical = model;
        return out;
    }
    if (asym.size() > 1) {
        out.tag = SymmetryClass::Unsupported;
        std::ostringstream os;
        os << "asymmetric in " << asym.size() << " axes (";
        for (std::size_t i = 0; i < asym.size(); ++i)
            os << (i ? "," : "") << asym[i] + 1;
        os << ")";
        out.unsupported_reason = os.str();
        return out;
    }

    out.tag = SymmetryClass::MostlySymmetric;
    out.asymmetric_axis = asym[0];
    if (asym[0] != d - 1) std::swap(out.permutation[asym[0]], out.permutation[d - 1]);
    WalkModel canonical = model.permuted(out.permutation);

    Rational a1 = 0, b1 = 0;
    for (const auto& [vec, w] : canonical.steps()) {
        if (vec[d - 1] == -1) a1 += w;
        if (vec[d - 1] == 1) b1 += w;
    }
    out.drift = b1 - a1;
    out.drift_sign = out.drift == 0  ? DriftSign::Zero
                     : out.drift > 0 ? DriftSign::Positive
                                     : DriftSign::Negative;
    out.canonical = std::move(canonical);
    return out;
}

AxisDecomposition decompose(const WalkModel& canonical_model) {
    const int d = canonical_model.dimension();
    LaurentPoly s = char_poly(canonical_model);

    AxisDecomposition out;
    out.A = s.section(d - 1, -1);
    out.Q = s.section(d - 1, 0);
    out.B = s.section(d - 1, 1);
    for (int k = 0; k + 1 < d; ++k) out.sectionals.push_back(s.section(k, 1));
    for (int k = 0; k < d; ++k) out.forward_weights.push_back(canonical_model.forward_weight(k));
    return out;
}

ClassifiedModel classify_and_decompose(const WalkModel& model) {
    Classification cls = classify(model);
    if (!cls.supported())
        throw WalkError(ErrorCode::UnsupportedClass,
                        "model is not highly or mostly symmetric: " + cls.unsupported_reason);
    AxisDecomposition dec = decompose(*cls.canonical);
    return ClassifiedModel{model, std::move(cls), std::move(dec)};
}

const char* symmetry_class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::HighlySymmetric: return "HighlySymmetric";
        case SymmetryClass::MostlySymmetric: return "MostlySymmetric";
        case SymmetryClass::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

const char* drift_sign_name(DriftSign s) {
    switch (s) {
        case DriftSign::Negative: return "negative";
        case DriftSign::Zero: return "zero";
        case DriftSign::Positive: return "positive";
    }
    return "Unknown";
}

} // namespace walks

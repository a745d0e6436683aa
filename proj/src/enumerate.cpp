#include "walks/enumerate.hpp"

#include <cmath>
#include <sstream>

#include "walks/errors.hpp"

namespace walks {

namespace {

// Flattened odometer over [0,N]^d with precomputed strides.
struct Box {
    int dim;
    int side; // N+1
    std::vector<std::size_t> stride;
    std::size_t cells;

    Box(int d, int n_max) : dim(d), side(n_max + 1), stride(d), cells(1) {
        for (int j = 0; j < d; ++j) {
            stride[j] = cells;
            cells *= static_cast<std::size_t>(side);
        }
    }
};

} // namespace

const Rational& CountSequence::exact_value(int n) const {
    if (mode_ != ArithmeticMode::Exact)
        throw WalkError(ErrorCode::BadInput, "exact_value requires exact mode");
    return exact_.at(n);
}

double CountSequence::value(int n) const {
    if (mode_ == ArithmeticMode::Exact) return to_double(exact_.at(n));
    return scaled_.at(n) * std::exp(static_cast<double>(n) *
                                    static_cast<double>(log_total_weight_));
}

namespace {

// log of a huge integer via its top 128 bits
long double log_bigint(const BigInt& x) {
    if (x <= 0) throw WalkError(ErrorCode::NonPositiveTerms, "log of non-positive integer");
    std::size_t bits = msb(x) + 1;
    int shift = bits > 128 ? static_cast<int>(bits - 128) : 0;
    BigInt top = x >> shift;
    return std::log(top.convert_to<long double>()) +
           static_cast<long double>(shift) * 0.6931471805599453094L;
}

} // namespace

long double CountSequence::log_value(int n) const {
    if (mode_ == ArithmeticMode::Exact) {
        const Rational& v = exact_.at(n);
        if (v <= 0)
            throw WalkError(ErrorCode::NonPositiveTerms, "log of non-positive count");
        return log_bigint(BigInt(numerator(v))) - log_bigint(BigInt(denominator(v)));
    }
    double s = scaled_.at(n);
    if (s <= 0) throw WalkError(ErrorCode::NonPositiveTerms, "log of non-positive count");
    return std::log(static_cast<long double>(s)) +
           static_cast<long double>(n) * log_total_weight_;
}

double CountSequence::rounding_bound(int n) const {
    if (mode_ == ArithmeticMode::Exact) return 0.0;
    return static_cast<double>(n) * static_cast<double>(step_count_) *
           std::ldexp(1.0, -52);
}

std::string CountSequence::export_text() const {
    std::ostringstream os;
    for (int n = 0; n <= max_length_; ++n) {
        os << n << '\t';
        if (mode_ == ArithmeticMode::Exact) {
            os << rational_str(exact_[n]);
        } else {
            os.precision(17);
            os << value(n);
        }
        os << '\n';
    }
    return os.str();
}

CountSequence CountSequence::from_exact(std::vector<Rational> values) {
    if (values.empty()) throw WalkError(ErrorCode::BadInput, "empty sequence");
    CountSequence out;
    out.mode_ = ArithmeticMode::Exact;
    out.max_length_ = static_cast<int>(values.size()) - 1;
    out.total_weight_ = 1;
    out.exact_ = std::move(values);
    return out;
}

CountSequence CountSequence::from_scaled(std::vector<double> scaled, const Rational& total,
                                         std::size_t step_count) {
    if (scaled.empty()) throw WalkError(ErrorCode::BadInput, "empty sequence");
    CountSequence out;
    out.mode_ = ArithmeticMode::Float64;
    out.max_length_ = static_cast<int>(scaled.size()) - 1;
    out.total_weight_ = total;
    out.log_total_weight_ = std::log(to_long_double(total));
    out.step_count_ = step_count;
    out.scaled_ = std::move(scaled);
    return out;
}

CountSequence CountSequence::import_text(const std::string& text) {
    std::vector<Rational> values;
    std::istringstream in(text);
    std::string line;
    int expect = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw WalkError(ErrorCode::BadInput, "sequence rows are n<TAB>value");
        int n = std::stoi(line.substr(0, tab));
        if (n != expect)
            throw WalkError(ErrorCode::BadInput, "sequence rows must start at 0 and be contiguous");
        values.push_back(parse_rational(line.substr(tab + 1)));
        ++expect;
    }
    return from_exact(std::move(values));
}

CountSequence count_walks(const WalkModel& model, int max_n, ArithmeticMode mode,
                          std::uint64_t table_cell_cap) {
    if (max_n < 0) throw WalkError(ErrorCode::BadInput, "max_n must be nonnegative");
    const int d = model.dimension();

    Box box(d, max_n);
    if (box.cells > table_cell_cap)
        throw WalkError(ErrorCode::ResourceLimit,
                        "DP table of " + std::to_string(box.cells) +
                            " cells exceeds the configured cap");

    // step offsets in the flattened table plus per-axis deltas for bounds
    struct StepInfo {
        std::ptrdiff_t offset;
        StepVector delta;
    };
    std::vector<StepInfo> infos;
    std::vector<Rational> weights;
    for (const auto& [vec, w] : model.steps()) {
        std::ptrdiff_t off = 0;
        for (int j = 0; j < d; ++j) off += static_cast<std::ptrdiff_t>(vec[j]) * box.stride[j];
        infos.push_back({off, vec});
        weights.push_back(w);
    }

    CountSequence out;
    out.mode_ = mode;
    out.max_length_ = max_n;
    out.fingerprint_ = model.fingerprint();
    out.step_count_ = model.step_count();
    out.total_weight_ = model.total_weight();
    out.log_total_weight_ = std::log(to_long_double(out.total_weight_));

    // odometer over the coordinates of each cell
    auto for_each_cell = [&](int coord_max, auto&& fn) {
        std::vector<int> pos(d, 0);
        std::size_t idx = 0;
        while (true) {
            fn(pos, idx);
            int j = 0;
            while (j < d) {
                if (pos[j] < coord_max) {
                    ++pos[j];
                    idx += box.stride[j];
                    break;
                }
                idx -= static_cast<std::size_t>(pos[j]) * box.stride[j];
                pos[j] = 0;
                ++j;
            }
            if (j == d) break;
        }
    };

    if (mode == ArithmeticMode::Exact) {
        // clear denominators: D = lcm of weight denominators
        BigInt denom_lcm = 1;
        for (const auto& w : weights) denom_lcm = lcm(denom_lcm, BigInt(denominator(w)));
        std::vector<BigInt> iw;
        for (const auto& w : weights)
            iw.push_back(BigInt(numerator(w)) * (denom_lcm / BigInt(denominator(w))));

        std::vector<BigInt> cur(box.cells, BigInt(0)), next(box.cells, BigInt(0));
        cur[0] = 1;
        out.exact_.reserve(max_n + 1);
        out.exact_.emplace_back(1);

        BigInt dpow = 1;
        for (int n = 1; n <= max_n; ++n) {
            dpow *= denom_lcm;
            BigInt layer_sum = 0;
            for_each_cell(std::min(n, max_n), [&](const std::vector<int>& pos, std::size_t idx) {
                BigInt acc = 0;
                for (std::size_t s = 0; s < infos.size(); ++s) {
                    bool ok = true;
                    for (int j = 0; j < d; ++j) {
                        int src = pos[j] - infos[s].delta[j];
                        if (src < 0 || src > max_n) { ok = false; break; }
                    }
                    if (!ok) continue;
                    const BigInt& v = cur[idx - infos[s].offset];
                    if (v != 0) acc += iw[s] * v;
                }
                next[idx] = acc;
                layer_sum += acc;
            });
            std::swap(cur, next);
            out.exact_.emplace_back(Rational(layer_sum, dpow));
        }
    } else {
        // double DP on s_n / S(1)^n: weights divided by the total once
        double total = to_double(out.total_weight_);
        std::vector<double> fw;
        for (const auto& w : weights) fw.push_back(to_double(w) / total);

        std::vector<double> cur(box.cells, 0.0), next(box.cells, 0.0);
        cur[0] = 1.0;
        out.scaled_.reserve(max_n + 1);
        out.scaled_.push_back(1.0);

        for (int n = 1; n <= max_n; ++n) {
            double layer_sum = 0.0;
            for_each_cell(std::min(n, max_n), [&](const std::vector<int>& pos, std::size_t idx) {
                double acc = 0.0;
                for (std::size_t s = 0; s < infos.size(); ++s) {
                    bool ok = true;
                    for (int j = 0; j < d; ++j) {
                        int src = pos[j] - infos[s].delta[j];
                        if (src < 0 || src > max_n) { ok = false; break; }
                    }
                    if (!ok) continue;
                    acc += fw[s] * cur[idx - infos[s].offset];
                }
                next[idx] = acc;
                layer_sum += acc;
            });
            std::swap(cur, next);
            out.scaled_.push_back(layer_sum);
        }
    }
    return out;
}

} // namespace walks

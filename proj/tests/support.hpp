#ifndef WALKS_TESTS_SUPPORT_HPP
#define WALKS_TESTS_SUPPORT_HPP

// Shared test machinery: an independent brute-force oracle over step
// strings and seeded random model generators. The oracle deliberately
// avoids the DP code path.

#include <random>
#include <set>
#include <vector>

#include "walks/model.hpp"
#include "walks/rational.hpp"

namespace walks::testsupport {

// Total weight of n-step walks staying in N^d: depth-first search over all
// step strings, pruning branches that leave the orthant.
inline Rational brute_force_weight(const WalkModel& model, int n) {
    const int d = model.dimension();
    std::vector<std::pair<StepVector, Rational>> steps(model.steps().begin(),
                                                       model.steps().end());
    Rational total = 0;
    std::vector<int> pos(d, 0);

    auto rec = [&](auto&& self, int remaining, const Rational& weight) -> void {
        if (remaining == 0) {
            total += weight;
            return;
        }
        for (const auto& [vec, w] : steps) {
            bool ok = true;
            for (int j = 0; j < d; ++j)
                if (pos[j] + vec[j] < 0) { ok = false; break; }
            if (!ok) continue;
            for (int j = 0; j < d; ++j) pos[j] += vec[j];
            self(self, remaining - 1, weight * w);
            for (int j = 0; j < d; ++j) pos[j] -= vec[j];
        }
    };
    rec(rec, n, Rational(1));
    return total;
}

// largest n with |steps|^n within the brute-force budget
inline int brute_force_depth(const WalkModel& model, int requested, double budget = 3e6) {
    double per = static_cast<double>(model.step_count());
    double total = 1;
    int n = 0;
    while (n < requested && total * per <= budget) {
        total *= per;
        ++n;
    }
    return n;
}

inline Rational random_weight(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 4), den(1, 3);
    return Rational(num(rng), den(rng));
}

// A valid model: random steps plus axis-aligned steps to guarantee
// forwards/backwards moves in every coordinate.
inline WalkModel random_valid_model(std::mt19937& rng, int d, int extra_steps = 4) {
    std::set<StepVector> chosen;
    for (int k = 0; k < d; ++k) {
        StepVector fwd(d, 0), bwd(d, 0);
        fwd[k] = 1;
        bwd[k] = -1;
        std::bernoulli_distribution keep(0.7);
        if (keep(rng)) chosen.insert(fwd);
        if (keep(rng)) chosen.insert(bwd);
    }
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int i = 0; i < extra_steps; ++i) {
        StepVector v(d);
        bool zero = true;
        for (int j = 0; j < d; ++j) {
            v[j] = entry(rng);
            if (v[j]) zero = false;
        }
        if (!zero) chosen.insert(v);
    }
    // patch any missing direction
    for (int k = 0; k < d; ++k) {
        bool fwd = false, bwd = false;
        for (const auto& v : chosen) {
            if (v[k] == 1) fwd = true;
            if (v[k] == -1) bwd = true;
        }
        if (!fwd) {
            StepVector v(d, 0);
            v[k] = 1;
            chosen.insert(v);
        }
        if (!bwd) {
            StepVector v(d, 0);
            v[k] = -1;
            chosen.insert(v);
        }
    }
    std::vector<std::pair<StepVector, Rational>> steps;
    for (const auto& v : chosen) steps.emplace_back(v, random_weight(rng));
    return WalkModel(d, steps);
}

// Closes a random step set under reflections of the listed axes, sharing
// each orbit's weight.
inline WalkModel random_symmetrized_model(std::mt19937& rng, int d,
                                          const std::vector<int>& symmetric_axes,
                                          int extra_steps = 3) {
    WalkModel seed = random_valid_model(rng, d, extra_steps);
    std::map<StepVector, Rational> closed;
    for (const auto& [vec, w] : seed.steps()) {
        // orbit under sign flips of the chosen axes
        std::vector<StepVector> orbit{vec};
        for (int axis : symmetric_axes) {
            std::size_t sz = orbit.size();
            for (std::size_t i = 0; i < sz; ++i) {
                StepVector r = orbit[i];
                r[axis] = -r[axis];
                orbit.push_back(std::move(r));
            }
        }
        for (const auto& v : orbit)
            if (closed.find(v) == closed.end()) closed[v] = w;
    }
    std::vector<std::pair<StepVector, Rational>> steps(closed.begin(), closed.end());
    return WalkModel(d, steps);
}

inline WalkModel random_highly_symmetric(std::mt19937& rng, int d) {
    std::vector<int> axes(d);
    for (int j = 0; j < d; ++j) axes[j] = j;
    return random_symmetrized_model(rng, d, axes);
}

// Mostly symmetric in the first d-1 axes; optionally force zero drift by
// topping up the lighter z_d layer with an axis step.
inline WalkModel random_mostly_symmetric(std::mt19937& rng, int d, bool force_zero_drift) {
    std::vector<int> axes(d - 1);
    for (int j = 0; j + 1 < d; ++j) axes[j] = j;
    WalkModel m = random_symmetrized_model(rng, d, axes);
    if (!force_zero_drift) return m;

    Rational a = 0, b = 0;
    for (const auto& [vec, w] : m.steps()) {
        if (vec[d - 1] == -1) a += w;
        if (vec[d - 1] == 1) b += w;
    }
    std::vector<std::pair<StepVector, Rational>> steps(m.steps().begin(), m.steps().end());
    if (a != b) {
        StepVector patch(d, 0);
        patch[d - 1] = a > b ? 1 : -1;
        steps.emplace_back(patch, abs(a - b));
    }
    return WalkModel(d, steps);
}

} // namespace walks::testsupport

#endif

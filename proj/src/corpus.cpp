#include "walks/corpus.hpp"

#include <cmath>

namespace walks {

namespace {

const double kPi = 3.14159265358979323846;

WalkModel make(int d, std::vector<std::pair<StepVector, int>> steps) {
    std::vector<std::pair<StepVector, Rational>> s;
    for (auto& [v, w] : steps) s.emplace_back(std::move(v), Rational(w));
    return WalkModel(d, s);
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;

    {
        CorpusEntry e{
            "cardinal-2d",
            "unweighted cardinal directions N,S,E,W in the quarter plane",
            make(2, {{{0, 1}, 1}, {{0, -1}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}}),
            "highly-symmetric",
            1,
            4.0,
            "4",
            1.0,
            {{4.0 / kPi, "4/pi"}},
            std::nullopt,
            std::nullopt,
            400,
            {0.005, 0.01, std::nullopt, 3}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{
            "negdrift-2d",
            "steps SW, SE, N; negative drift, no horizontal steps",
            make(2, {{{-1, -1}, 1}, {{1, -1}, 1}, {{0, 1}, 1}}),
            "negative-drift",
            2,
            2.0 * std::sqrt(2.0),
            "2*sqrt(2)",
            2.0,
            {{24.0 * std::sqrt(2.0) / kPi, "24*sqrt(2)/pi"}, {32.0 / kPi, "32/pi"}},
            std::nullopt,
            std::nullopt,
            400,
            {0.005, 0.015, std::nullopt, 3}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{
            "posdrift-2d",
            "steps NW, NE, S; positive drift",
            make(2, {{{-1, 1}, 1}, {{1, 1}, 1}, {{0, -1}, 1}}),
            "positive-drift",
            1,
            3.0,
            "3",
            0.5,
            {{std::sqrt(3.0) / (2.0 * std::sqrt(kPi)), "sqrt(3)/(2*sqrt(pi))"}},
            std::nullopt,
            std::nullopt,
            400,
            {0.005, 0.01, std::nullopt, 3}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{
            "zerodrift-2d-weighted",
            "North step of weight 2 with SE and SW; zero drift but not highly symmetric",
            make(2, {{{0, 1}, 2}, {{1, -1}, 1}, {{-1, -1}, 1}}),
            "zero-drift",
            1,
            4.0,
            "4",
            1.0,
            {{2.0 * std::sqrt(2.0) / kPi, "2*sqrt(2)/pi"}},
            1.0 / std::sqrt(kPi),
            "1/sqrt(pi)",
            400,
            {0.005, 0.01, 0.05, 3}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{
            "zerodrift-3d-a",
            "3D zero-drift model: four down steps along the axes, four diagonal up steps",
            make(3, {{{1, 0, -1}, 1},
                     {{-1, 0, -1}, 1},
                     {{0, 1, -1}, 1},
                     {{0, -1, -1}, 1},
                     {{1, 1, 1}, 1},
                     {{-1, 1, 1}, 1},
                     {{1, -1, 1}, 1},
                     {{-1, -1, 1}, 1}}),
            "zero-drift",
            1,
            8.0,
            "8",
            1.5,
            {{8.0 * std::sqrt(2.0) / (3.0 * std::pow(kPi, 1.5)), "8*sqrt(2)/(3*pi^(3/2))"}},
            -8.0 / (9.0 * kPi),
            "-8/(9*pi)",
            80,
            {0.005, 0.03, std::nullopt, 3}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{
            "zerodrift-3d-b",
            "3D zero-drift model with a vanishing second-order term",
            make(3, {{{1, 0, 1}, 1}, {{-1, 0, 1}, 1}, {{0, 1, -1}, 1}, {{0, -1, -1}, 1}}),
            "zero-drift",
            1,
            4.0,
            "4",
            1.5,
            {{4.0 * std::sqrt(2.0) / std::pow(kPi, 1.5), "4*sqrt(2)/pi^(3/2)"}},
            0.0,
            "0",
            80,
            {0.005, 0.03, std::nullopt, 3}};
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace walks

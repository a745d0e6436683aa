#ifndef WALKS_CORPUS_HPP
#define WALKS_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "walks/fitting.hpp"
#include "walks/model.hpp"

namespace walks {

// Built-in walk models with their reference asymptotic values, used by the
// CLI and the verification harness.
struct CorpusEntry {
    std::string name;
    std::string description;
    WalkModel model;

    std::string expected_theorem;
    int expected_period = 1;
    double expected_base = 0;
    std::string expected_base_form;
    double expected_order = 0;
    // leading constant per residue class, with its closed form
    std::vector<std::pair<double, std::string>> expected_constants;
    std::optional<double> expected_kappa;
    std::optional<std::string> expected_kappa_form;

    int default_max_n = 400;
    ToleranceProfile tolerance;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

} // namespace walks

#endif

#ifndef WALKS_ENUMERATE_HPP
#define WALKS_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "walks/model.hpp"
#include "walks/rational.hpp"

namespace walks {

enum class ArithmeticMode { Exact, Float64 };

// Total weight s_0..s_N of orthant walks from the origin, computed by
// dynamic programming over the box [0,n]^d.
class CountSequence {
public:
    ArithmeticMode mode() const { return mode_; }
    int max_length() const { return max_length_; }
    std::uint64_t model_fingerprint() const { return fingerprint_; }

    // Exact mode only.
    const Rational& exact_value(int n) const;

    // Both modes; float mode is exact up to the rounding bound, exact mode
    // converts (may overflow to inf for enormous n, use log_value then).
    double value(int n) const;
    long double log_value(int n) const; // natural log of s_n

    // Worst-case relative rounding bound of the float recurrence,
    // n * |steps| * 2^-52 (zero in exact mode).
    double rounding_bound(int n) const;

    Rational total_weight() const { return total_weight_; }

    // Newline-delimited "n<TAB>value" rows (exact: "p/q", float: decimal).
    std::string export_text() const;

    // Sequences from explicit values (synthetic fitting inputs, imports).
    static CountSequence from_exact(std::vector<Rational> values);
    // scaled[n] = s_n / total^n, as produced by the float recurrence
    static CountSequence from_scaled(std::vector<double> scaled, const Rational& total,
                                     std::size_t step_count = 0);
    // Parses the export format back into a sequence (exact rows only).
    static CountSequence import_text(const std::string& text);

    friend CountSequence count_walks(const WalkModel&, int, ArithmeticMode, std::uint64_t);

private:
    ArithmeticMode mode_ = ArithmeticMode::Exact;
    int max_length_ = 0;
    std::uint64_t fingerprint_ = 0;
    std::size_t step_count_ = 0;
    Rational total_weight_;
    std::vector<Rational> exact_;   // exact mode
    std::vector<double> scaled_;    // float mode: s_n / S(1)^n
    long double log_total_weight_ = 0;
};

// mode Exact: clears weight denominators once and runs an integer DP,
// dividing by D^n on output. mode Float64: double DP on counts scaled by
// S(1)^-n (no overflow for any n).
// table_cell_cap bounds the DP table size (N+1)^d.
CountSequence count_walks(const WalkModel& model, int max_n,
                          ArithmeticMode mode = ArithmeticMode::Exact,
                          std::uint64_t table_cell_cap = 1ull << 27);

} // namespace walks

#endif

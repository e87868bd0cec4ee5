#pragma once

#include <span>
#include <string>
#include <vector>

#include "lbpc/core_model.hpp"
#include "lbpc/package_merge_engine.hpp"

namespace lbpc {

// (n - D^min_len) / (D - 1) * D^-min_len, in units of radix^-max_len.
u128 total_width(const Instance& inst);

// Node (i, level) weight: w_i * (phi(level - min_len) - phi(level - min_len - 1)).
inline double node_weight(const Instance& inst, std::size_t symbol, int level) {
    return inst.weight(symbol) * inst.delta_phi(level - inst.min_len());
}

// Optimal padded length vector by Package-Merge over the full node grid.
// Throws InfeasibleError, CapacityError.
LengthVector solve_package_merge(const Instance& inst, detail::SweepStats* stats = nullptr);

struct Codebook {
    int radix = 2;
    // Caller's symbol order, dummies removed.
    std::vector<int> lengths;
    std::vector<std::string> codewords;
    double cost = 0.0;
    Rational kraft;         // real symbols only
    Rational padded_kraft;  // including dummies
};

// Canonical codewords (digits, most significant first) for lengths sorted
// nondecreasing: codewords of one length are consecutive integers.
std::vector<std::vector<unsigned>> canonical_codewords(std::span<const int> sorted_lengths, int radix);

// 0-9a-z digits for radix <= 36, dot-separated numbers otherwise.
std::string codeword_string(std::span<const unsigned> digits, int radix);

// Canonical codebook for a padded length vector in sorted-weight order.
// A Kraft sum above 1 is a contract violation (std::invalid_argument).
Codebook lengths_to_codebook(const Instance& inst, const LengthVector& padded_lengths);

}  // namespace lbpc

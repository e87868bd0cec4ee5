#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc {

struct OracleResult {
    double min_cost = 0.0;
    // Every minimizer (relative tolerance 1e-12), ascending lexicographic order.
    std::vector<LengthVector> optima;
    // Number of vectors that passed the Kraft (and fringe) test.
    std::size_t candidates = 0;
};

// Exhaustive search over nondecreasing length vectors.
//
// Without a fringe bound: padded vectors in [min_len, max_len] with padded
// Kraft sum exactly 1, cost as in penalty_cost.
//
// With a fringe bound d: vectors over the real symbols only, lengths in
// [min_len, requested_max_len], Kraft sum at most 1, max - min <= d, cost
// sum of w_i * phi(l_i - min_len).
//
// Throws InvalidInput above 12 padded symbols, InfeasibleError when the
// bounds admit no code.
OracleResult enumerate_optima(const Instance& inst, std::optional<int> fringe_bound = std::nullopt);

// Compare by the lengths sorted descending, lexicographically.
bool reverse_lex_less(const LengthVector& a, const LengthVector& b);

}  // namespace lbpc

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc {

struct FringeResult {
    // Padded, sorted-weight order.
    LengthVector lengths;
    int window_min = 0;
    int window_max = 0;
    // Sum of w_i * phi(l_i - origin) with the caller's penalty.
    double cost = 0.0;
};

// Length windows [lo, hi] swept for `symbols` real symbols, smallest hi first.
std::vector<std::pair<int, int>> fringe_windows(std::size_t symbols, int radix, int d, int origin = 0);

// Best code with fringe at most d. The instance's min_len is the penalty
// origin and a hard lower bound; its max_len is ignored. Windows are tried
// from the smallest maximum length up; ties keep the earlier window.
FringeResult best_fringe_limited(const Instance& inst, int d);

// Same with origin 0.
FringeResult best_fringe_limited(std::span<const double> weights, int radix, int d, const Penalty& penalty);

}  // namespace lbpc

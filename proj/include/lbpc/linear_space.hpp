#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc {

// The four attributes kept per package instead of its contents.
struct PackageSummary {
    double mu = 0.0;   // total weight
    u128 rho = 0;      // total width
    std::size_t nu = 0;  // nodes on the middle level
    u128 psi = 0;      // width of nodes below the middle level

    bool operator==(const PackageSummary&) const = default;
};

// Componentwise sum of radix equal-width parts. Unequal widths are a
// contract violation (std::invalid_argument).
PackageSummary merge_summaries(std::span<const PackageSummary> parts);

// Nodes [first, last] x [top, bottom] with the nodeset width to select there.
struct Region {
    std::size_t first = 0;
    std::size_t last = 0;
    int top = 0;
    int bottom = 0;
    u128 width = 0;
};

struct LinearSpaceStats {
    // Node count scanned by all attribute runs at each recursion depth (depth 0 first).
    std::vector<std::size_t> nodes_per_depth;
    std::vector<std::size_t> runs_per_depth;
    std::size_t peak_live = 0;
};

// Same output as solve_package_merge, keeping O(n) summaries alive.
LengthVector solve_linear_space(const Instance& inst, LinearSpaceStats* stats = nullptr);

}  // namespace lbpc

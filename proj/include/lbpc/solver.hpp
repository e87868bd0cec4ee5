#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lbpc/bounded_coder.hpp"
#include "lbpc/core_model.hpp"

namespace lbpc {

enum class SolverKind { Auto, PackageMerge, LinearSpace, Monge, Huffman };

const char* to_string(SolverKind kind);
// Throws InvalidInput on an unknown name.
SolverKind parse_solver(std::string_view name);

// Padded, sorted-weight lengths. Auto picks Monge for the linear penalty and
// LinearSpace otherwise. Monge and Huffman need the linear penalty; Huffman
// also needs the maximum length not to bind.
LengthVector solve(const Instance& inst, SolverKind kind = SolverKind::PackageMerge);

struct Solution {
    std::string solver;  // the solver that actually ran
    LengthVector padded;
    Codebook codebook;
    int fringe = 0;       // over real symbols
    int min_len = 0;      // bounds the code was solved under
    int max_len = 0;
};

// Full pipeline: normalize, solve, build the canonical codebook. With a
// fringe bound, spec.max_len is ignored and spec.min_len is the penalty
// origin.
Solution solve_code(const ProblemSpec& spec, SolverKind kind = SolverKind::Auto,
                    std::optional<int> fringe_bound = std::nullopt);

}  // namespace lbpc

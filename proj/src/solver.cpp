#include "lbpc/solver.hpp"

#include "lbpc/dary_huffman.hpp"
#include "lbpc/fringe_search.hpp"
#include "lbpc/linear_space.hpp"
#include "lbpc/monge_kpath.hpp"

namespace lbpc {

const char* to_string(SolverKind kind) {
    switch (kind) {
        case SolverKind::Auto: return "auto";
        case SolverKind::PackageMerge: return "package-merge";
        case SolverKind::LinearSpace: return "linear-space";
        case SolverKind::Monge: return "monge";
        case SolverKind::Huffman: return "huffman";
    }
    return "auto";
}

SolverKind parse_solver(std::string_view name) {
    for (SolverKind k : {SolverKind::Auto, SolverKind::PackageMerge, SolverKind::LinearSpace, SolverKind::Monge,
                         SolverKind::Huffman}) {
        if (name == to_string(k)) return k;
    }
    throw InvalidInput("unknown solver '" + std::string(name) + "'");
}

namespace {

SolverKind resolve(const Instance& inst, SolverKind kind) {
    if (kind != SolverKind::Auto) return kind;
    return inst.penalty().is_linear() ? SolverKind::Monge : SolverKind::LinearSpace;
}

int real_fringe(const Instance& inst, const LengthVector& padded) {
    return fringe(std::span<const int>(padded.data(), inst.real_count()));
}

}  // namespace

LengthVector solve(const Instance& inst, SolverKind kind) {
    switch (resolve(inst, kind)) {
        case SolverKind::PackageMerge:
            return solve_package_merge(inst);
        case SolverKind::LinearSpace:
            return solve_linear_space(inst);
        case SolverKind::Monge:
            return solve_linear_fast(inst);
        case SolverKind::Huffman: {
            if (!inst.penalty().is_linear()) throw InvalidInput("the huffman solver needs the linear penalty");
            Precheck pre = precheck_lmax(inst);
            if (pre.verdict != Precheck::Verdict::Accept) {
                throw InvalidInput("the maximum length binds; the huffman solver does not apply");
            }
            return pre.lengths;
        }
        case SolverKind::Auto:
            break;
    }
    throw std::logic_error("unresolved solver");
}

Solution solve_code(const ProblemSpec& spec, SolverKind kind, std::optional<int> fringe_bound) {
    const Instance inst = Instance::build(spec);
    Solution out;
    if (!fringe_bound) {
        const SolverKind used = resolve(inst, kind);
        out.solver = to_string(used);
        out.padded = solve(inst, used);
        out.codebook = lengths_to_codebook(inst, out.padded);
        out.min_len = inst.min_len();
        out.max_len = inst.bounds() == BoundsClass::Nontrivial ? inst.max_len() : inst.min_len();
    } else {
        if (kind != SolverKind::Auto) throw InvalidInput("a fringe bound picks its own solver; use --solver auto");
        FringeResult r = best_fringe_limited(inst, *fringe_bound);
        out.solver = "fringe";
        out.padded = std::move(r.lengths);
        out.codebook = lengths_to_codebook(inst.with_bounds(r.window_min, r.window_max), out.padded);
        out.codebook.cost = r.cost;
        out.min_len = r.window_min;
        out.max_len = r.window_max;
    }
    out.fringe = real_fringe(inst, out.padded);
    return out;
}

}  // namespace lbpc

#include "lbpc/fringe_search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lbpc/linear_space.hpp"
#include "lbpc/monge_kpath.hpp"

namespace lbpc {

namespace {

// The caller's penalty re-based to a window starting at `lo`.
Penalty window_penalty(const Penalty& base, int origin, int lo, int radix) {
    switch (base.kind()) {
        case Penalty::Kind::Linear:  // differs by a constant per window
        case Penalty::Kind::QuadraticShifted:
        case Penalty::Kind::ExponentialShifted:
            return base;
        default:
            break;
    }
    const int shift = lo - origin;
    return Penalty::custom(base.name(), [base, shift, origin, radix](int delta) {
        return base.evaluate(delta + shift, origin, radix);
    });
}

LengthVector solve_window(const Instance& w) {
    if (w.bounds() == BoundsClass::TrivialMin) return fixed_length_code(w);
    if (w.penalty().is_linear()) return solve_linear_fast(w);
    return solve_linear_space(w);
}

}  // namespace

std::vector<std::pair<int, int>> fringe_windows(std::size_t symbols, int radix, int d, int origin) {
    if (d < 0) throw InvalidInput("fringe bound must be nonnegative");
    const int first = std::max(ceil_log(symbols, radix), origin);
    const int last = std::max(first, floor_log(symbols, radix) + d);
    std::vector<std::pair<int, int>> out;
    for (int hi = first; hi <= last; ++hi) out.emplace_back(std::max(origin, hi - d), hi);
    return out;
}

FringeResult best_fringe_limited(const Instance& inst, int d) {
    if (d < 0) throw InvalidInput("fringe bound must be nonnegative");
    const int origin = inst.min_len();
    const std::size_t n = inst.real_count();
    const int radix = inst.radix();

    FringeResult best;
    bool have = false;
    for (const auto& [lo, hi] : fringe_windows(n, radix, d, origin)) {
        const Instance w = inst.with_bounds(lo, hi, window_penalty(inst.penalty(), origin, lo, radix));
        if (w.bounds() == BoundsClass::Infeasible) continue;
        LengthVector lengths = solve_window(w);

        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) cost += inst.weight(i) * inst.penalty().evaluate(lengths[i] - origin, origin, radix);
        const double tol = 1e-12 * std::max(1.0, std::abs(best.cost));
        if (!have || cost < best.cost - tol) {
            best = FringeResult{std::move(lengths), lo, hi, cost};
            have = true;
        }
    }
    if (!have) throw InfeasibleError("no length window admits a code");
    return best;
}

FringeResult best_fringe_limited(std::span<const double> weights, int radix, int d, const Penalty& penalty) {
    ProblemSpec spec;
    spec.weights.assign(weights.begin(), weights.end());
    spec.radix = radix;
    spec.min_len = 0;
    spec.max_len = hard_max_length(weights.size() + dummy_count(weights.size(), radix), radix);
    spec.penalty = penalty;
    return best_fringe_limited(Instance::build(spec), d);
}

}  // namespace lbpc

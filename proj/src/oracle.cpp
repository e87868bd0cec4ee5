#include "lbpc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lbpc {

namespace {

constexpr std::size_t kMaxSymbols = 12;

struct Search {
    std::size_t n = 0;
    int lo = 0;
    int hi = 0;
    std::vector<u128> unit;  // unit[l - lo] = radix^(hi - l)
    std::vector<double> weight;
    std::function<double(int)> cost_of;  // cost per unit weight at a length
    bool exact = true;
    std::optional<int> fringe;

    std::vector<std::pair<double, LengthVector>> found;
    LengthVector current;

    void run(u128 budget) {
        current.assign(n, lo);
        descend(0, lo, budget, 0.0);
    }

    void descend(std::size_t i, int from, u128 budget, double cost) {
        if (i == n) {
            if (exact && budget != 0) return;
            found.emplace_back(cost, current);
            return;
        }
        const std::size_t left = n - i;
        int top = hi;
        if (fringe && i > 0) top = std::min(top, current[0] + *fringe);
        for (int l = from; l <= top; ++l) {
            const u128 u = unit[static_cast<std::size_t>(l - lo)];
            if (u > budget) continue;
            // Exact mode: the remaining slots must be able to use up the budget.
            if (exact && static_cast<u128>(left) * u < budget) continue;
            current[i] = l;
            descend(i + 1, l, budget - u, cost + weight[i] * cost_of(l));
        }
    }
};

}  // namespace

OracleResult enumerate_optima(const Instance& inst, std::optional<int> fringe_bound) {
    if (inst.padded_count() > kMaxSymbols) throw InvalidInput("oracle is limited to 12 padded symbols");
    if (fringe_bound && *fringe_bound < 0) throw InvalidInput("fringe bound must be nonnegative");

    OracleResult out;
    Search s;
    s.lo = inst.min_len();
    s.fringe = fringe_bound;

    if (!fringe_bound) {
        if (inst.bounds() == BoundsClass::Infeasible) throw InfeasibleError("radix^max_len is smaller than the symbol count");
        if (inst.bounds() == BoundsClass::TrivialMin) {
            const LengthVector v = fixed_length_code(inst);
            out.min_cost = penalty_cost(inst, v);
            out.optima.push_back(v);
            out.candidates = 1;
            return out;
        }
        s.n = inst.padded_count();
        s.hi = inst.max_len();
        s.exact = true;
        s.weight.assign(inst.weights().begin(), inst.weights().end());
        s.cost_of = [&inst](int l) { return inst.phi(l - inst.min_len()); };
    } else {
        s.n = inst.real_count();
        s.hi = inst.requested_max_len();
        s.exact = false;
        s.weight.assign(inst.weights().begin(), inst.weights().begin() + static_cast<std::ptrdiff_t>(s.n));
        s.cost_of = [&inst](int l) { return inst.penalty().evaluate(l - inst.min_len(), inst.min_len(), inst.radix()); };
    }

    for (int l = s.lo; l <= s.hi; ++l) {
        const u128 u = checked_pow(inst.radix(), s.hi - l);
        if (u == 0) throw InvalidInput("oracle length range too wide for exact Kraft sums");
        s.unit.push_back(u);
    }
    const u128 whole = checked_pow(inst.radix(), s.hi);  // Kraft sum 1
    if (whole == 0) throw InvalidInput("oracle length range too wide for exact Kraft sums");
    s.run(whole);
    if (s.found.empty()) throw InfeasibleError("no length vector satisfies the constraints");

    out.candidates = s.found.size();
    out.min_cost = s.found.front().first;
    for (const auto& f : s.found) out.min_cost = std::min(out.min_cost, f.first);
    const double tol = 1e-12 * std::max(1.0, std::abs(out.min_cost));
    for (auto& f : s.found) {
        if (f.first <= out.min_cost + tol) out.optima.push_back(std::move(f.second));
    }
    return out;
}

bool reverse_lex_less(const LengthVector& a, const LengthVector& b) {
    LengthVector x = a;
    LengthVector y = b;
    std::sort(x.begin(), x.end(), std::greater<int>());
    std::sort(y.begin(), y.end(), std::greater<int>());
    return x < y;
}

}  // namespace lbpc

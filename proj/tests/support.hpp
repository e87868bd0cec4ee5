#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc::test {

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n, bool with_ties) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> w(n);
    if (with_ties) {
        // few distinct values so equal weights are common
        std::uniform_int_distribution<int> pick(1, 4);
        for (double& x : w) x = pick(rng);
    } else {
        for (double& x : w) x = std::exp2(-8.0 * unif(rng));
    }
    return w;
}

inline Penalty pick_penalty(int which) {
    switch (which % 3) {
        case 0: return Penalty::linear();
        case 1: return Penalty::quadratic();
        default: return Penalty::exponential_shifted(1.0);
    }
}

// Random normalized spec with a feasible upper bound (possibly above the hard bound).
inline ProblemSpec random_spec(std::mt19937_64& rng, std::size_t n_lo, std::size_t n_hi, std::vector<int> radices,
                               std::vector<int> min_lens, int penalty) {
    std::uniform_int_distribution<std::size_t> pick_n(n_lo, n_hi);
    ProblemSpec spec;
    const std::size_t n = pick_n(rng);
    spec.radix = radices[std::uniform_int_distribution<std::size_t>(0, radices.size() - 1)(rng)];
    spec.min_len = min_lens[std::uniform_int_distribution<std::size_t>(0, min_lens.size() - 1)(rng)];
    const std::size_t padded = n + dummy_count(n, spec.radix);
    const int lo = std::max(spec.min_len, ceil_log(padded, spec.radix));
    const int hi = std::max(lo, hard_max_length(padded, spec.radix) + 1);
    spec.max_len = std::uniform_int_distribution<int>(lo, hi)(rng);
    spec.weights = random_weights(rng, n, std::uniform_int_distribution<int>(0, 3)(rng) == 0);
    spec.penalty = pick_penalty(penalty);
    return spec;
}

// Kraft sum of sorted lengths compared to 1, independent of kraft_sum.
inline int kraft_compare_one(const std::vector<int>& lengths, int radix) {
    // sum over levels, carrying from the deepest level
    const int deepest = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
    std::vector<long double> count(static_cast<std::size_t>(deepest) + 1, 0);
    for (int l : lengths) count[static_cast<std::size_t>(l)] += 1;
    for (int l = deepest; l > 0; --l) count[static_cast<std::size_t>(l - 1)] += count[static_cast<std::size_t>(l)] / radix;
    const long double s = count[0];
    if (std::fabs(s - 1.0L) < 1e-15L) return 0;
    return s < 1.0L ? -1 : 1;
}

inline bool nondecreasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace lbpc::test

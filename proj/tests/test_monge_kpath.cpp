#include <gtest/gtest.h>

#include <random>

#include "lbpc/bounded_coder.hpp"
#include "lbpc/monge_kpath.hpp"
#include "lbpc/oracle.hpp"
#include "support.hpp"

using namespace lbpc;

namespace {

// Seven symbols with distinct weights so sums identify index sets.
const std::vector<double> kP{64, 32, 16, 8, 4, 2, 1};

double tail_of(const std::vector<double>& p, std::size_t i) {
    double s = 0;
    for (std::size_t k = p.size() - i; k < p.size(); ++k) s += p[k];
    return s;
}

// All strictly increasing finite paths of `links` links to `target`, by brute force.
void all_paths(const CumulativeTail& t, int radix, std::size_t target, int links, std::vector<std::size_t>& cur,
               std::vector<AlphaPath>& out) {
    if (static_cast<int>(cur.size()) == links + 1) {
        if (cur.back() != target) return;
        AlphaPath p{cur, 0.0};
        for (std::size_t i = 1; i < cur.size(); ++i) p.weight += *edge_weight(static_cast<long long>(cur[i - 1]), static_cast<long long>(cur[i]), t, radix);
        out.push_back(p);
        return;
    }
    for (std::size_t v = cur.back() + 1; v <= target; ++v) {
        if (!edge_weight(static_cast<long long>(cur.back()), static_cast<long long>(v), t, radix)) continue;
        cur.push_back(v);
        all_paths(t, radix, target, links, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST(MongeKPath, CumulativeTail) {
    const CumulativeTail t(kP);
    EXPECT_EQ(t.symbols(), 7u);
    EXPECT_EQ(t[0], 0.0);
    EXPECT_EQ(t[7], 127.0);
    for (std::size_t i = 0; i <= 7; ++i) EXPECT_EQ(t[i], tail_of(kP, i));
}

TEST(MongeKPath, EdgeWeights) {
    const CumulativeTail t(kP);
    EXPECT_EQ(edge_weight(0, 1, t, 3), std::optional<double>(kP[4] + kP[5] + kP[6]));
    EXPECT_EQ(edge_weight(0, 2, t, 3), std::optional<double>(tail_of(kP, 6)));
    EXPECT_EQ(edge_weight(1, 2, t, 3), std::optional<double>(tail_of(kP, 5)));
    EXPECT_FALSE(edge_weight(0, 3, t, 3).has_value());
    EXPECT_EQ(edge_weight(-2, 1, t, 3), edge_weight(0, 1, t, 3));
}

TEST(MongeKPath, TwoAndOneLinkPaths) {
    const CumulativeTail t(kP);
    const AlphaPath two = min_k_link_path(t, 3, 1, 2);
    EXPECT_EQ(two.alpha, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_DOUBLE_EQ(two.weight, t[3] + t[5]);
    EXPECT_EQ(alpha_to_lengths(two, 3, 1, 7), (LengthVector{1, 1, 2, 2, 3, 3, 3}));

    const AlphaPath one = min_k_link_path(t, 3, 1, 1);
    EXPECT_EQ(one.alpha, (std::vector<std::size_t>{0, 2}));
    EXPECT_DOUBLE_EQ(one.weight, t[6]);
    EXPECT_EQ(alpha_to_lengths(one, 3, 1, 7), (LengthVector{1, 2, 2, 2, 2, 2, 2}));

    EXPECT_THROW(min_k_link_path(t, 3, 1, 3), NoPath);
    EXPECT_THROW(min_k_link_path(t, 3, 1, 0), NoPath);
}

TEST(MongeKPath, ForcedPath) {
    const std::vector<double> w(9, 1.0);
    const CumulativeTail t(w);
    const AlphaPath p = min_k_link_path(t, 2, 0, 8);
    EXPECT_EQ(p.alpha, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
    const LengthVector l = alpha_to_lengths(p, 2, 0, 9);
    EXPECT_EQ(l, (LengthVector{1, 2, 3, 4, 5, 6, 7, 8, 8}));
    EXPECT_EQ(kraft_sum(l, 2), (Rational{1, 1}));
}

TEST(MongeKPath, RowMinimaMatchesScan) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        // a(r) + b(c) + f(r - c) with f convex is Monge; integer values make ties common
        std::vector<long long> a(rows), b(cols);
        for (auto& x : a) x = std::uniform_int_distribution<long long>(0, 5)(rng);
        for (auto& x : b) x = std::uniform_int_distribution<long long>(0, 5)(rng);
        const long long scale = std::uniform_int_distribution<long long>(0, 2)(rng);
        auto value = [&](std::size_t r, std::size_t c) {
            const long long d = static_cast<long long>(r) - static_cast<long long>(c);
            return a[r] + b[c] + scale * d * d;
        };
        const auto got = row_minima<long long>(rows, cols, value, std::less<long long>());
        for (std::size_t r = 0; r < rows; ++r) {
            std::size_t best = 0;
            for (std::size_t c = 1; c < cols; ++c) if (value(r, c) < value(r, best)) best = c;
            EXPECT_EQ(got[r], best) << "trial " << trial << " row " << r;
        }
    }
}

TEST(MongeKPath, QuadrangleInequalityExhaustive) {
    std::mt19937_64 rng(79);
    for (int radix : {2, 3, 4}) {
        for (std::size_t n = 1; n <= 30; ++n) {
            if ((n - 1) % static_cast<std::size_t>(radix - 1) != 0) continue;
            std::vector<double> w = test::random_weights(rng, n, n % 2 == 0);
            std::sort(w.begin(), w.end(), std::greater<double>());
            const CumulativeTail t(w);
            const long long top = static_cast<long long>(n);
            for (long long a = 0; a < top; ++a) {
                for (long long b = a + 1; b + 1 <= top; ++b) {
                    const auto w00 = edge_weight(a, b, t, radix);
                    const auto w11 = edge_weight(a + 1, b + 1, t, radix);
                    const auto w01 = edge_weight(a, b + 1, t, radix);
                    const auto w10 = edge_weight(a + 1, b, t, radix);
                    if (!(w00 && w11 && w01 && w10)) continue;
                    EXPECT_LE(*w00 + *w11, *w01 + *w10 + 1e-12) << radix << " " << n << " " << a << " " << b;
                }
            }
        }
    }
}

TEST(MongeKPath, PathWeightEqualsPenalty) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        const int radix = 2 + trial % 3;
        const std::size_t n = 1 + static_cast<std::size_t>(radix - 1) * std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const int lo = std::uniform_int_distribution<int>(0, 1)(rng);
        if (checked_pow(radix, lo) > n) continue;
        std::vector<double> w = test::random_weights(rng, n, trial % 2 == 0);
        std::sort(w.begin(), w.end(), std::greater<double>());
        const CumulativeTail t(w);
        const std::size_t target = (n - static_cast<std::size_t>(checked_pow(radix, lo))) / static_cast<std::size_t>(radix - 1);
        for (int k = 1; k <= static_cast<int>(target); ++k) {
            std::vector<AlphaPath> paths;
            std::vector<std::size_t> cur{0};
            all_paths(t, radix, target, k, cur, paths);
            for (const AlphaPath& p : paths) {
                LengthVector l;
                try {
                    l = alpha_to_lengths(p, radix, lo, n);
                } catch (const std::logic_error&) {
                    continue;  // edge-finite but not a tree
                }
                double cost = 0;
                for (std::size_t i = 0; i < n; ++i) cost += w[i] * (l[i] - lo);
                EXPECT_NEAR(p.weight, cost, 1e-9);
                EXPECT_EQ(kraft_sum(l, radix), (Rational{1, 1}));
            }
            if (paths.empty()) continue;
            const AlphaPath best = min_k_link_path(t, radix, lo, k);
            double want = paths[0].weight;
            for (const AlphaPath& p : paths) want = std::min(want, p.weight);
            EXPECT_NEAR(best.weight, want, 1e-9) << "trial " << trial << " k " << k;
        }
    }
}

TEST(MongeKPath, SolveLinearFastExamples) {
    // seven symbols, ternary, min length 1: the bound binds at 3
    const Instance fig = Instance::build(ProblemSpec{kP, 3, 1, 3, Penalty::linear()});
    EXPECT_EQ(solve_linear_fast(fig), (LengthVector{1, 1, 2, 2, 3, 3, 3}));
    const Instance b = Instance::build(ProblemSpec{{10, 6, 2, 1}, 2, 1, 2, Penalty::linear()});
    EXPECT_EQ(solve_linear_fast(b), (LengthVector{2, 2, 2, 2}));
    EXPECT_THROW(solve_linear_fast(Instance::build(ProblemSpec{{1, 2, 3}, 2, 0, 3, Penalty::quadratic()})),
                 std::invalid_argument);
}

TEST(MongeKPath, CostMatchesFullSolver) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 500; ++trial) {
        const ProblemSpec spec = test::random_spec(rng, 1, 100, {2, 3, 4}, {0, 1, 2}, 0);
        const Instance inst = Instance::build(spec);
        if (inst.bounds() == BoundsClass::Infeasible) continue;
        const LengthVector fast = solve_linear_fast(inst);
        EXPECT_TRUE(test::close_rel(penalty_cost(inst, fast), penalty_cost(inst, solve_package_merge(inst)), 1e-9))
            << "trial " << trial;
        EXPECT_TRUE(test::nondecreasing(fast));
        if (inst.bounds() == BoundsClass::Nontrivial) {
            EXPECT_EQ(kraft_sum(fast, inst.radix()), (Rational{1, 1}));
        }
    }
}

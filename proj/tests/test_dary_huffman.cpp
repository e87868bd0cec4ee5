#include <gtest/gtest.h>

#include <random>

#include "lbpc/bounded_coder.hpp"
#include "lbpc/dary_huffman.hpp"
#include "lbpc/oracle.hpp"
#include "support.hpp"

using namespace lbpc;

namespace {

Instance make(std::vector<double> w, int radix, int lo, int hi) {
    return Instance::build(ProblemSpec{std::move(w), radix, lo, hi, Penalty::linear()});
}

double expected_length(const std::vector<double>& w, const LengthVector& l) {
    double s = 0, t = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * l[i];
        t += w[i];
    }
    return s / t;
}

}  // namespace

TEST(DaryHuffman, UnitWeightsTernary) {
    const std::vector<double> w(7, 1.0);
    const LengthVector l = bottom_merge_huffman(w, 3);
    EXPECT_EQ(l, (LengthVector{1, 2, 2, 2, 2, 2, 2}));
    EXPECT_NEAR(expected_length(w, l), 2.0 - 1.0 / 7.0, 1e-15);
}

TEST(DaryHuffman, BinaryExample) {
    const std::vector<double> w{10, 6, 2, 1};
    const LengthVector l = bottom_merge_huffman(w, 2);
    EXPECT_EQ(l, (LengthVector{1, 2, 3, 3}));
    EXPECT_DOUBLE_EQ(10 * 1 + 6 * 2 + 2 * 3 + 1 * 3, 31.0);
}

TEST(DaryHuffman, SingleSymbol) {
    EXPECT_EQ(bottom_merge_huffman(std::vector<double>{1.0}, 2), (LengthVector{0}));
}

TEST(DaryHuffman, Truncated) {
    EXPECT_EQ(truncated_huffman(std::vector<double>(7, 1.0), 3, 1), (LengthVector{1, 2, 2, 2, 2, 2, 2}));
    EXPECT_EQ(truncated_huffman(std::vector<double>(9, 1.0), 3, 2), LengthVector(9, 2));
    const std::vector<double> w{0.4, 0.3, 0.14, 0.06, 0.06, 0.02, 0.02};
    EXPECT_EQ(truncated_huffman(w, 3, 0), bottom_merge_huffman(w, 3));
    EXPECT_THROW(truncated_huffman(std::vector<double>(7, 1.0), 3, 2), std::domain_error);
    EXPECT_THROW(truncated_huffman(std::vector<double>(6, 1.0), 3, 0), std::invalid_argument);
}

TEST(DaryHuffman, PrecheckExamples) {
    {
        const Precheck p = precheck_lmax(make({10, 6, 2, 1}, 2, 1, 3));
        EXPECT_EQ(p.verdict, Precheck::Verdict::Accept);
        EXPECT_EQ(p.lengths, (LengthVector{1, 2, 3, 3}));
    }
    {
        const Instance inst = make({10, 6, 2, 1}, 2, 1, 2);
        EXPECT_EQ(precheck_lmax(inst).verdict, Precheck::Verdict::MustHitMax);
        const OracleResult o = enumerate_optima(inst);
        ASSERT_EQ(o.optima.size(), 1u);
        EXPECT_EQ(o.optima[0], (LengthVector{2, 2, 2, 2}));
    }
    {
        const Precheck p = precheck_lmax(make(std::vector<double>(7, 1.0), 3, 2, 4));
        EXPECT_EQ(p.verdict, Precheck::Verdict::Accept);
        EXPECT_EQ(p.lengths, LengthVector(7, 2));
    }
    EXPECT_THROW(precheck_lmax(Instance::build(ProblemSpec{{1, 2, 3}, 2, 0, 3, Penalty::quadratic()})), std::invalid_argument);
}

TEST(DaryHuffman, OptimalAndMinimumReverseLex) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        const int radix = 2 + trial % 2;
        const int lo = trial % 3 == 0 ? 1 : 0;
        const Instance inst = make(test::random_weights(rng, n, trial % 2 == 0), radix, lo, 20);
        if (inst.bounds() != BoundsClass::Nontrivial) continue;
        const LengthVector h = truncated_huffman(inst.weights(), radix, lo);
        const OracleResult o = enumerate_optima(inst);
        EXPECT_TRUE(test::close_rel(penalty_cost(inst, h), o.min_cost, 1e-12));
        const LengthVector best = *std::min_element(o.optima.begin(), o.optima.end(), reverse_lex_less);
        EXPECT_EQ(h, best) << "trial " << trial;
        EXPECT_LE(h.back(), hard_max_length(inst.padded_count(), radix) + lo);
    }
}

TEST(DaryHuffman, MustHitMaxImpliesLongestAtBound) {
    std::mt19937_64 rng(67);
    int binding = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const ProblemSpec spec = test::random_spec(rng, 2, 10, {2, 3, 4}, {0, 1, 2}, 0);
        const Instance inst = Instance::build(spec);
        if (inst.padded_count() > 12 || inst.bounds() != BoundsClass::Nontrivial) continue;
        if (precheck_lmax(inst).verdict != Precheck::Verdict::MustHitMax) continue;
        ++binding;
        const OracleResult o = enumerate_optima(inst);
        EXPECT_TRUE(std::any_of(o.optima.begin(), o.optima.end(),
                                [&](const LengthVector& v) { return v.back() == inst.max_len(); }));
        EXPECT_EQ(solve_package_merge(inst).back(), inst.max_len());
    }
    EXPECT_GT(binding, 100);
}

TEST(DaryHuffman, LinearTimeOnSortedInput) {
    std::mt19937_64 rng(71);
    std::vector<double> w = test::random_weights(rng, 1 << 20, false);
    std::sort(w.begin(), w.end(), std::greater<double>());
    const LengthVector l = bottom_merge_huffman(w, 2);
    EXPECT_EQ(kraft_sum(l, 2), (Rational{1, 1}));
}

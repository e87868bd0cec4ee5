#include "lbpc/dary_huffman.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lbpc {

LengthVector truncated_huffman(std::span<const double> padded_weights, int radix, int min_len) {
    const std::size_t n = padded_weights.size();
    if (n == 0) return {};
    const u128 roots = checked_pow(radix, min_len);
    if (roots == 0 || roots > n) throw std::domain_error("radix^min_len exceeds the symbol count");
    if ((n - 1) % static_cast<std::size_t>(radix - 1) != 0) throw std::invalid_argument("weights are not padded");

    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
    const std::size_t merges = (n - static_cast<std::size_t>(roots)) / static_cast<std::size_t>(radix - 1);
    std::vector<std::size_t> parent(n + merges, kRoot);
    std::vector<double> merged_weight;
    merged_weight.reserve(merges);

    std::size_t next_single = n;  // singles pop from the light end
    std::size_t next_merged = 0;
    for (std::size_t m = 0; m < merges; ++m) {
        const std::size_t node = n + m;
        double w = 0.0;
        for (int k = 0; k < radix; ++k) {
            const bool single = next_single > 0 && (next_merged >= merged_weight.size() ||
                                                    padded_weights[next_single - 1] <= merged_weight[next_merged]);
            if (single) {
                --next_single;
                w += padded_weights[next_single];
                parent[next_single] = node;
            } else {
                w += merged_weight[next_merged];
                parent[n + next_merged] = node;
                ++next_merged;
            }
        }
        merged_weight.push_back(w);
    }

    // Parents are created after their children, so one descending pass sets depths.
    std::vector<int> depth(n + merges, 0);
    for (std::size_t v = n + merges; v-- > 0;) {
        if (parent[v] != kRoot) depth[v] = depth[parent[v]] + 1;
    }
    LengthVector lengths(depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n));
    for (int& l : lengths) l += min_len;
    // Equal weights may leave an out-of-order pair; sorting keeps the cost.
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

LengthVector bottom_merge_huffman(std::span<const double> padded_weights, int radix) {
    return truncated_huffman(padded_weights, radix, 0);
}

Precheck precheck_lmax(const Instance& inst) {
    if (!inst.penalty().is_linear()) throw std::invalid_argument("the Huffman pre-check holds for the linear penalty only");
    if (inst.bounds() == BoundsClass::Infeasible) throw InfeasibleError("radix^max_len is smaller than the symbol count");
    if (inst.bounds() == BoundsClass::TrivialMin) return Precheck{Precheck::Verdict::Accept, fixed_length_code(inst)};

    Precheck out;
    out.lengths = truncated_huffman(inst.weights(), inst.radix(), inst.min_len());
    const int longest = out.lengths.empty() ? 0 : out.lengths.back();
    out.verdict = longest <= inst.max_len() ? Precheck::Verdict::Accept : Precheck::Verdict::MustHitMax;
    return out;
}

}  // namespace lbpc

#include "lbpc/monge_kpath.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "lbpc/dary_huffman.hpp"

namespace lbpc {

CumulativeTail::CumulativeTail(std::span<const double> padded_weights) : s_(padded_weights.size() + 1, 0.0) {
    const std::size_t n = padded_weights.size();
    for (std::size_t i = 1; i <= n; ++i) s_[i] = s_[i - 1] + padded_weights[n - i];
    if (n > 0) heaviest_ = padded_weights.front();
}

std::optional<double> edge_weight(long long a_prev, long long a_next, const CumulativeTail& tails, int radix) {
    const long long index = static_cast<long long>(radix) * std::max(a_next, 0LL) - std::max(a_prev, 0LL);
    if (index < 0 || index > static_cast<long long>(tails.symbols())) return std::nullopt;
    return tails[static_cast<std::size_t>(index)];
}

namespace {

// Edges past the finite region keep a convex extension and carry a positive
// violation, so the matrix stays Monge while any finite path wins.
struct PathValue {
    bool infinite = false;
    std::int64_t violation = 0;
    double cost = 0.0;
};

bool path_less(const PathValue& a, const PathValue& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    if (a.violation != b.violation) return a.violation < b.violation;
    return a.cost < b.cost;
}

}  // namespace

AlphaPath min_k_link_path(const CumulativeTail& tails, int radix, int min_len, int links) {
    const std::size_t n = tails.symbols();
    const u128 roots = checked_pow(radix, min_len);
    if (radix < 2 || roots == 0 || roots > n || (n - static_cast<std::size_t>(roots)) % static_cast<std::size_t>(radix - 1) != 0) {
        throw std::invalid_argument("symbol count is not a padded count at least radix^min_len");
    }
    const std::size_t target = (n - static_cast<std::size_t>(roots)) / static_cast<std::size_t>(radix - 1);
    if (links < 1 || static_cast<std::size_t>(links) > target) throw NoPath("no strictly increasing path with that many links");

    const double sn = tails[n];
    const double slope = tails.heaviest();
    auto edge = [&](std::size_t u, std::size_t v) {
        PathValue out;
        const std::int64_t x = static_cast<std::int64_t>(radix) * static_cast<std::int64_t>(v) - static_cast<std::int64_t>(u);
        const std::int64_t over = x - static_cast<std::int64_t>(n);
        if (over <= 0) {
            out.cost = tails[static_cast<std::size_t>(x)];
        } else {
            out.violation = over;
            out.cost = sn + static_cast<double>(over) * slope;
        }
        return out;
    };

    // dist[u] over layer j-1; paths starting away from 0 carry violations too.
    std::vector<PathValue> dist(target + 1);
    for (std::size_t u = 0; u <= target; ++u) dist[u] = PathValue{false, static_cast<std::int64_t>(u), 0.0};
    std::vector<std::vector<std::uint32_t>> choice(static_cast<std::size_t>(links));

    for (int j = 1; j <= links; ++j) {
        const std::size_t row0 = static_cast<std::size_t>(j);
        const std::size_t col0 = static_cast<std::size_t>(j - 1);
        const std::size_t rows = target - row0 + 1;
        const std::size_t cols = target - col0;
        auto value = [&](std::size_t r, std::size_t c) {
            const std::size_t v = row0 + r;
            const std::size_t u = col0 + c;
            if (u >= v) return PathValue{true, 0, 0.0};
            PathValue e = edge(u, v);
            e.violation += dist[u].violation;
            e.cost += dist[u].cost;
            return e;
        };
        const std::vector<std::size_t> arg = row_minima<PathValue>(rows, cols, value, path_less);

        std::vector<PathValue> next(target + 1, PathValue{true, 0, 0.0});
        auto& pick = choice[static_cast<std::size_t>(j - 1)];
        pick.assign(target + 1, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            next[row0 + r] = value(r, arg[r]);
            pick[row0 + r] = static_cast<std::uint32_t>(col0 + arg[r]);
        }
        dist.swap(next);
    }

    if (dist[target].infinite || dist[target].violation != 0) throw NoPath("every path with that many links uses an infinite edge");

    AlphaPath path;
    path.weight = dist[target].cost;
    path.alpha.assign(static_cast<std::size_t>(links) + 1, 0);
    std::size_t v = target;
    for (int j = links; j >= 1; --j) {
        path.alpha[static_cast<std::size_t>(j)] = v;
        v = choice[static_cast<std::size_t>(j - 1)][v];
    }
    path.alpha[0] = v;
    return path;
}

LengthVector alpha_to_lengths(const AlphaPath& path, int radix, int min_len, std::size_t symbols) {
    if (path.alpha.size() < 2 || path.alpha.front() != 0) throw std::logic_error("alpha path must start at 0 and have a link");
    const std::size_t k = path.alpha.size() - 1;
    const int max_len = min_len + static_cast<int>(k);

    // internal[l - min_len] = internal vertices on level l
    std::vector<long long> internal(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        if (path.alpha[i] <= path.alpha[i - 1]) throw std::logic_error("alpha path must be strictly increasing");
        internal[k - i] = static_cast<long long>(path.alpha[i] - path.alpha[i - 1]);
    }
    const u128 roots = checked_pow(radix, min_len);
    if (roots == 0 || roots > symbols) throw std::logic_error("radix^min_len exceeds the symbol count");

    LengthVector lengths;
    lengths.reserve(symbols);
    long long above = static_cast<long long>(roots);  // vertices on the current level
    for (int l = min_len; l <= max_len; ++l) {
        const long long leaves = above - internal[static_cast<std::size_t>(l - min_len)];
        if (leaves < 0) throw std::logic_error("alpha path implies a negative leaf count");
        lengths.insert(lengths.end(), static_cast<std::size_t>(leaves), l);
        above = static_cast<long long>(radix) * internal[static_cast<std::size_t>(l - min_len)];
    }
    if (lengths.size() != symbols) throw std::logic_error("alpha path leaf count differs from the symbol count");
    return lengths;
}

LengthVector solve_linear_fast(const Instance& inst) {
    if (!inst.penalty().is_linear()) throw std::invalid_argument("the k-link path solver needs the linear penalty");
    const Precheck pre = precheck_lmax(inst);
    if (pre.verdict == Precheck::Verdict::Accept) return pre.lengths;

    const CumulativeTail tails(inst.weights());
    const AlphaPath path =
        min_k_link_path(tails, inst.radix(), inst.min_len(), inst.max_len() - inst.min_len());
    return alpha_to_lengths(path, inst.radix(), inst.min_len(), inst.padded_count());
}

}  // namespace lbpc

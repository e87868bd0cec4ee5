#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc {

class NoPath : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// s_i = sum of the i lightest padded weights, s_0 = 0.
class CumulativeTail {
  public:
    explicit CumulativeTail(std::span<const double> padded_weights);

    std::size_t symbols() const { return s_.size() - 1; }
    double operator[](std::size_t i) const { return s_[i]; }
    double heaviest() const { return heaviest_; }

  private:
    std::vector<double> s_;
    double heaviest_ = 0.0;
};

// w(a', a'') = s_(D max(a'',0) - max(a',0)) when that index is within [0, n];
// nullopt stands for infinity. Paths only use a' < a''.
std::optional<double> edge_weight(long long a_prev, long long a_next, const CumulativeTail& tails, int radix);

// alpha[i] = internal vertices on the deepest i levels; strictly increasing from 0.
struct AlphaPath {
    std::vector<std::size_t> alpha;
    double weight = 0.0;
};

// Leftmost row minima of an implicit totally monotone matrix (SMAWK).
// value(r, c) returns a totally ordered value; less(a, b) is the order.
template <class Value, class Lookup, class Less>
std::vector<std::size_t> row_minima(std::size_t rows, std::size_t cols, Lookup value, Less less);

// Minimum-weight path 0 = alpha_0 < ... < alpha_links = (n - D^min_len)/(D - 1).
// Throws NoPath when no strictly increasing finite path has that many links.
AlphaPath min_k_link_path(const CumulativeTail& tails, int radix, int min_len, int links);

// Code lengths (sorted) for the tree an alpha path describes. A path that
// implies a negative leaf count is a contract violation (std::logic_error).
LengthVector alpha_to_lengths(const AlphaPath& path, int radix, int min_len, std::size_t symbols);

// Linear penalty only: Huffman pre-check, then the k-link path when the
// bound binds.
LengthVector solve_linear_fast(const Instance& inst);

// ---------------------------------------------------------------------------

namespace detail {

template <class Value, class Lookup, class Less>
void smawk(std::vector<std::size_t>& rows, std::vector<std::size_t>& cols, Lookup& value, Less& less,
           std::vector<std::size_t>& argmin) {
    if (rows.empty()) return;

    std::vector<std::size_t> kept;
    kept.reserve(rows.size());
    for (std::size_t c : cols) {
        while (!kept.empty()) {
            const std::size_t r = rows[kept.size() - 1];
            if (less(value(r, c), value(r, kept.back()))) kept.pop_back();
            else break;
        }
        if (kept.size() < rows.size()) kept.push_back(c);
    }

    std::vector<std::size_t> odd;
    odd.reserve(rows.size() / 2);
    for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
    smawk<Value>(odd, kept, value, less, argmin);

    std::size_t k = 0;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        const std::size_t r = rows[i];
        const std::size_t stop = i + 1 < rows.size() ? argmin[rows[i + 1]] : kept.back();
        std::size_t best = kept[k];
        Value best_value = value(r, best);
        while (kept[k] != stop) {
            ++k;
            Value v = value(r, kept[k]);
            if (less(v, best_value)) {
                best = kept[k];
                best_value = v;
            }
        }
        argmin[r] = best;
    }
}

}  // namespace detail

template <class Value, class Lookup, class Less>
std::vector<std::size_t> row_minima(std::size_t rows, std::size_t cols, Lookup value, Less less) {
    std::vector<std::size_t> argmin(rows, 0);
    if (rows == 0 || cols == 0) return argmin;
    std::vector<std::size_t> r(rows);
    std::vector<std::size_t> c(cols);
    for (std::size_t i = 0; i < rows; ++i) r[i] = i;
    for (std::size_t j = 0; j < cols; ++j) c[j] = j;
    detail::smawk<Value>(r, c, value, less, argmin);
    return argmin;
}

}  // namespace lbpc

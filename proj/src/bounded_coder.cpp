#include "lbpc/bounded_coder.hpp"

#include <algorithm>
#include <numeric>

namespace lbpc {

namespace {

constexpr std::uint32_t kAtomBit = 0x80000000u;

struct Handle {
    double weight;
    std::uint32_t ref;
};

// Atoms of class c are the nodes on level max_len - c, lightest symbol first.
class GridSource {
  public:
    explicit GridSource(const Instance& inst) : inst_(inst), n_(inst.padded_count()) {}

    std::size_t classes() const { return static_cast<std::size_t>(inst_.max_len() - inst_.min_len()); }
    std::size_t count(std::size_t) const { return n_; }
    Handle atom(std::size_t c, std::size_t k) const {
        const std::size_t i = n_ - 1 - k;
        return Handle{node_weight(inst_, i, inst_.max_len() - static_cast<int>(c)),
                      kAtomBit | static_cast<std::uint32_t>(i)};
    }

  private:
    const Instance& inst_;
    std::size_t n_;
};

}  // namespace

u128 total_width(const Instance& inst) {
    if (inst.bounds() != BoundsClass::Nontrivial) return 0;
    inst.require_width_capacity();
    return static_cast<u128>(inst.internal_below_min()) * inst.unit(inst.min_len());
}

LengthVector solve_package_merge(const Instance& inst, detail::SweepStats* stats) {
    if (inst.bounds() == BoundsClass::Infeasible) throw InfeasibleError("radix^max_len is smaller than the symbol count");
    if (inst.bounds() == BoundsClass::TrivialMin) return fixed_length_code(inst);
    inst.require_width_capacity();
    if (inst.padded_count() >= kAtomBit) throw CapacityError("too many symbols");

    const int radix = inst.radix();
    std::vector<std::uint32_t> children;
    std::uint32_t packages = 0;
    std::vector<std::uint32_t> stack;

    GridSource source(inst);
    const std::vector<unsigned> digits = detail::base_digits(total_width(inst), radix);
    const detail::SweepStats s = detail::package_merge_sweep<Handle>(
        digits, radix, source, [](const Handle& h) { return h.weight; },
        [&](std::span<const Handle> parts) {
            if (packages >= kAtomBit - 1) throw CapacityError("too many packages");
            double w = 0.0;
            for (const Handle& h : parts) {
                w += h.weight;
                children.push_back(h.ref);
            }
            return Handle{w, packages++};
        },
        [&](const Handle& h) { stack.push_back(h.ref); });
    if (stats != nullptr) *stats = s;

    LengthVector lengths(inst.padded_count(), inst.min_len());
    while (!stack.empty()) {
        const std::uint32_t ref = stack.back();
        stack.pop_back();
        if (ref & kAtomBit) {
            ++lengths[ref & ~kAtomBit];
            continue;
        }
        const std::size_t base = static_cast<std::size_t>(ref) * static_cast<std::size_t>(radix);
        stack.insert(stack.end(), children.begin() + static_cast<std::ptrdiff_t>(base),
                     children.begin() + static_cast<std::ptrdiff_t>(base + radix));
    }
    return lengths;
}

std::vector<std::vector<unsigned>> canonical_codewords(std::span<const int> sorted_lengths, int radix) {
    std::vector<std::vector<unsigned>> out;
    out.reserve(sorted_lengths.size());
    std::vector<unsigned> code;
    for (std::size_t k = 0; k < sorted_lengths.size(); ++k) {
        const auto len = static_cast<std::size_t>(sorted_lengths[k]);
        if (k == 0) {
            code.assign(len, 0);
        } else {
            if (len < code.size()) throw std::invalid_argument("lengths must be sorted nondecreasing");
            std::size_t pos = code.size();
            while (pos > 0 && code[pos - 1] + 1 == static_cast<unsigned>(radix)) code[--pos] = 0;
            if (pos == 0) throw std::invalid_argument("Kraft sum exceeds 1");
            ++code[pos - 1];
            code.resize(len, 0);
        }
        out.push_back(code);
    }
    return out;
}

std::string codeword_string(std::span<const unsigned> digits, int radix) {
    std::string s;
    if (radix <= 36) {
        for (unsigned d : digits) s.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)));
        return s;
    }
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (k != 0) s.push_back('.');
        s += std::to_string(digits[k]);
    }
    return s;
}

Codebook lengths_to_codebook(const Instance& inst, const LengthVector& padded_lengths) {
    if (padded_lengths.size() != inst.padded_count()) throw std::invalid_argument("length vector has the wrong size");
    const int radix = inst.radix();
    const std::size_t n = inst.real_count();
    const std::span<const int> real(padded_lengths.data(), n);

    Codebook book;
    book.radix = radix;
    book.padded_kraft = kraft_sum(padded_lengths, radix);
    book.kraft = kraft_sum(real, radix);
    if (book.padded_kraft.num > book.padded_kraft.den) throw std::invalid_argument("Kraft sum exceeds 1");
    book.cost = penalty_cost(inst, padded_lengths);

    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return real[a] < real[b]; });
    std::vector<int> sorted(n);
    for (std::size_t k = 0; k < n; ++k) sorted[k] = real[rank[k]];
    const auto words = canonical_codewords(sorted, radix);

    book.lengths.assign(n, 0);
    book.codewords.assign(n, {});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t original = inst.order()[rank[k]];
        book.lengths[original] = sorted[k];
        book.codewords[original] = codeword_string(words[k], radix);
    }
    return book;
}

}  // namespace lbpc

#include "lbpc/linear_space.hpp"

#include <stdexcept>

#include "lbpc/bounded_coder.hpp"
#include "lbpc/package_merge_engine.hpp"

namespace lbpc {

namespace {

class RegionSource {
  public:
    RegionSource(const Instance& inst, const Region& r, int mid) : inst_(inst), r_(r), mid_(mid) {}

    std::size_t classes() const { return static_cast<std::size_t>(r_.bottom - r_.top + 1); }
    std::size_t count(std::size_t) const { return r_.last - r_.first + 1; }
    PackageSummary atom(std::size_t c, std::size_t k) const {
        const int level = r_.bottom - static_cast<int>(c);
        const std::size_t i = r_.last - k;
        const u128 w = inst_.unit(level);
        return PackageSummary{node_weight(inst_, i, level), w, level == mid_ ? std::size_t{1} : std::size_t{0},
                              level > mid_ ? w : u128{0}};
    }

  private:
    const Instance& inst_;
    const Region& r_;
    int mid_;
};

class Reconstruction {
  public:
    Reconstruction(const Instance& inst, LengthVector& lengths, LinearSpaceStats* stats)
        : inst_(inst), lengths_(lengths), stats_(stats) {}

    void solve(const Region& r, std::size_t depth) {
        if (r.width == 0) return;
        if (r.first > r.last || r.top > r.bottom) throw std::logic_error("nonzero width on an empty region");
        const std::size_t columns = r.last - r.first + 1;

        if (r.top == r.bottom) {
            const u128 count = r.width / inst_.unit(r.top);
            if (count > columns || count * inst_.unit(r.top) != r.width) {
                throw std::logic_error("single-level region width is not a node count");
            }
            for (std::size_t i = r.last + 1 - static_cast<std::size_t>(count); i <= r.last; ++i) ++lengths_[i];
            return;
        }

        const int mid = (r.top + r.bottom) / 2;
        const u128 finest = inst_.unit(r.bottom);
        if (r.width % finest != 0) throw std::logic_error("region width finer than its deepest level");

        RegionSource source(inst_, r, mid);
        PackageSummary chosen;
        const std::vector<unsigned> digits = detail::base_digits(r.width / finest, inst_.radix());
        const detail::SweepStats s = detail::package_merge_sweep<PackageSummary>(
            digits, inst_.radix(), source, [](const PackageSummary& p) { return p.mu; },
            [](std::span<const PackageSummary> parts) { return merge_summaries(parts); },
            [&](const PackageSummary& p) {
                chosen.mu += p.mu;
                chosen.rho += p.rho;
                chosen.nu += p.nu;
                chosen.psi += p.psi;
            });
        record(depth, columns * static_cast<std::size_t>(r.bottom - r.top + 1), s.peak_live);
        if (chosen.rho != r.width) throw std::logic_error("attribute run width mismatch");

        const std::size_t n_mid = chosen.nu;
        if (n_mid > columns) throw std::logic_error("middle-level count exceeds region");
        u128 upper = 0;  // width of one full column over levels [top, mid]
        for (int l = r.top; l <= mid; ++l) upper += inst_.unit(l);
        const u128 fixed = static_cast<u128>(n_mid) * upper;  // B and Gamma
        if (fixed + chosen.psi > r.width) throw std::logic_error("decomposition exceeds region width");

        const std::size_t split = r.last + 1 - n_mid;  // first column of B/Gamma/Delta
        for (std::size_t i = split; i <= r.last; ++i) lengths_[i] += mid - r.top + 1;

        if (n_mid > 0) solve(Region{split, r.last, mid + 1, r.bottom, chosen.psi}, depth + 1);
        else if (chosen.psi != 0) throw std::logic_error("deep nodes without middle-level nodes");

        const u128 rest = r.width - fixed - chosen.psi;
        if (split > r.first) solve(Region{r.first, split - 1, r.top, mid - 1, rest}, depth + 1);
        else if (rest != 0) throw std::logic_error("upper-left remainder without columns");
    }

  private:
    void record(std::size_t depth, std::size_t nodes, std::size_t live) {
        if (stats_ == nullptr) return;
        if (stats_->nodes_per_depth.size() <= depth) {
            stats_->nodes_per_depth.resize(depth + 1, 0);
            stats_->runs_per_depth.resize(depth + 1, 0);
        }
        stats_->nodes_per_depth[depth] += nodes;
        ++stats_->runs_per_depth[depth];
        stats_->peak_live = std::max(stats_->peak_live, live);
    }

    const Instance& inst_;
    LengthVector& lengths_;
    LinearSpaceStats* stats_;
};

}  // namespace

PackageSummary merge_summaries(std::span<const PackageSummary> parts) {
    PackageSummary out;
    for (const PackageSummary& p : parts) {
        if (p.rho != parts.front().rho) throw std::invalid_argument("summaries to merge must have equal widths");
        out.mu += p.mu;
        out.rho += p.rho;
        out.nu += p.nu;
        out.psi += p.psi;
    }
    return out;
}

LengthVector solve_linear_space(const Instance& inst, LinearSpaceStats* stats) {
    if (inst.bounds() == BoundsClass::Infeasible) throw InfeasibleError("radix^max_len is smaller than the symbol count");
    if (inst.bounds() == BoundsClass::TrivialMin) return fixed_length_code(inst);
    inst.require_width_capacity();

    LengthVector lengths(inst.padded_count(), inst.min_len());
    Reconstruction rec(inst, lengths, stats);
    rec.solve(Region{0, inst.padded_count() - 1, inst.min_len() + 1, inst.max_len(), total_width(inst)}, 0);
    return lengths;
}

}  // namespace lbpc

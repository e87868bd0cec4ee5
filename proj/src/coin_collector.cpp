#include "lbpc/coin_collector.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lbpc {

namespace {

constexpr std::uint32_t kAtomBit = 0x80000000u;
constexpr std::size_t kMaxClasses = 4096;

struct Handle {
    double weight;
    std::uint32_t ref;  // kAtomBit | coin index, or package index
    int width_exp;
};

class GroupSource {
  public:
    explicit GroupSource(const CoinProblem& p) : problem_(p) {}

    std::size_t classes() const { return problem_.class_count(); }
    std::size_t count(std::size_t c) const { return problem_.group(c).size(); }
    Handle atom(std::size_t c, std::size_t k) const {
        return Handle{problem_.group(c)[k].weight, kAtomBit | problem_.positions(c)[k],
                      problem_.finest() - static_cast<int>(c)};
    }

  private:
    const CoinProblem& problem_;
};

u128 scaled(int radix, int e) {
    const u128 p = checked_pow(radix, e);
    if (p == 0) throw CapacityError("coin width ratio exceeds 128 bits");
    return p;
}

}  // namespace

CoinProblem::CoinProblem(int radix, std::vector<Coin> coins, ExactWidth total)
    : radix_(radix), coins_(std::move(coins)), total_(total) {
    if (radix < 2) throw InvalidInput("radix must be at least 2");
    std::unordered_set<std::uint32_t> seen;
    int finest = total.exponent;
    int coarsest = total.exponent;
    for (const Coin& c : coins_) {
        if (!(c.weight >= 0.0)) throw InvalidInput("coin weights must be nonnegative");
        if (!seen.insert(c.id).second) throw InvalidInput("coin ids must be unique");
        finest = std::max(finest, c.width_exp);
        coarsest = std::min(coarsest, c.width_exp);
    }
    if (coins_.size() >= kAtomBit) throw CapacityError("too many coins");
    const auto span = static_cast<std::size_t>(finest - coarsest) + 1;
    if (span > kMaxClasses) throw CapacityError("coin widths span too many powers of the radix");
    finest_ = finest;
    positions_.resize(span);
    for (std::uint32_t k = 0; k < coins_.size(); ++k) {
        positions_[static_cast<std::size_t>(finest - coins_[k].width_exp)].push_back(k);
    }
    groups_.resize(span);
    for (std::size_t g = 0; g < span; ++g) {
        auto& pos = positions_[g];
        std::sort(pos.begin(), pos.end(), [&](std::uint32_t a, std::uint32_t b) {
            const Coin& x = coins_[a];
            const Coin& y = coins_[b];
            return x.weight != y.weight ? x.weight < y.weight : x.id < y.id;
        });
        groups_[g].reserve(pos.size());
        for (std::uint32_t k : pos) groups_[g].push_back(coins_[k]);
    }
    const u128 scale = scaled(radix, finest - total.exponent);
    if (total.units != 0 && scale > ~static_cast<u128>(0) / total.units) {
        throw CapacityError("target width exceeds 128 bits");
    }
    target_units_ = total.units * scale;
}

CoinSelection package_merge(const CoinProblem& problem, bool record_packages) {
    const int radix = problem.radix();
    std::vector<std::uint32_t> children;
    std::vector<int> package_exp;
    std::vector<int> part_exps;
    std::vector<Handle> taken;

    GroupSource source(problem);
    const std::vector<unsigned> digits = detail::base_digits(problem.target_units(), radix);
    CoinSelection out;
    out.stats = detail::package_merge_sweep<Handle>(
        digits, radix, source, [](const Handle& h) { return h.weight; },
        [&](std::span<const Handle> parts) {
            const auto id = static_cast<std::uint32_t>(package_exp.size());
            if (id >= kAtomBit) throw CapacityError("too many packages");
            double w = 0.0;
            for (const Handle& h : parts) {
                w += h.weight;
                children.push_back(h.ref);
                if (record_packages) part_exps.push_back(h.width_exp);
            }
            package_exp.push_back(parts.front().width_exp - 1);
            return Handle{w, id, parts.front().width_exp - 1};
        },
        [&](const Handle& h) { taken.push_back(h); });

    std::vector<std::uint32_t> stack;
    for (const Handle& h : taken) {
        out.total_weight += h.weight;
        stack.push_back(h.ref);
    }
    while (!stack.empty()) {
        const std::uint32_t ref = stack.back();
        stack.pop_back();
        if (ref & kAtomBit) {
            out.ids.push_back(problem.coins()[ref & ~kAtomBit].id);
            continue;
        }
        for (int k = 0; k < radix; ++k) stack.push_back(children[static_cast<std::size_t>(ref) * radix + k]);
    }
    std::sort(out.ids.begin(), out.ids.end());

    if (record_packages) {
        out.packages.reserve(package_exp.size());
        for (std::size_t p = 0; p < package_exp.size(); ++p) {
            const auto first = part_exps.begin() + static_cast<std::ptrdiff_t>(p * radix);
            out.packages.push_back(PackageRecord{package_exp[p], std::vector<int>(first, first + radix)});
        }
    }
    return out;
}

bool verify_selection(const CoinProblem& problem, std::span<const std::uint32_t> ids) {
    std::unordered_map<std::uint32_t, int> width_of;
    for (const Coin& c : problem.coins()) width_of.emplace(c.id, c.width_exp);
    std::unordered_set<std::uint32_t> used;
    u128 sum = 0;
    for (std::uint32_t id : ids) {
        auto it = width_of.find(id);
        if (it == width_of.end() || !used.insert(id).second) return false;
        sum += scaled(problem.radix(), problem.finest() - it->second);
        if (sum > problem.target_units()) return false;
    }
    return sum == problem.target_units();
}

}  // namespace lbpc

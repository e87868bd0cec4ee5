#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lbpc/core_model.hpp"
#include "lbpc/package_merge_engine.hpp"

namespace lbpc {

// A coin of width radix^-width_exp. Weights are nonnegative.
struct Coin {
    int width_exp = 0;
    double weight = 0.0;
    std::uint32_t id = 0;
};

// units * radix^-exponent, exactly.
struct ExactWidth {
    u128 units = 0;
    int exponent = 0;
};

// The radix-ary Coin Collector's problem: pick coins whose widths sum to
// exactly `total`, minimizing total weight.
class CoinProblem {
  public:
    CoinProblem(int radix, std::vector<Coin> coins, ExactWidth total);

    int radix() const { return radix_; }
    // Narrowest width exponent; class c holds coins with width_exp == finest() - c.
    int finest() const { return finest_; }
    std::size_t class_count() const { return groups_.size(); }
    // Coins of class c sorted by (weight, id).
    std::span<const Coin> group(std::size_t c) const { return groups_[c]; }
    // positions(c)[k] is the index in coins() of group(c)[k].
    std::span<const std::uint32_t> positions(std::size_t c) const { return positions_[c]; }
    // Target width in units of radix^-finest().
    u128 target_units() const { return target_units_; }
    const ExactWidth& total() const { return total_; }
    const std::vector<Coin>& coins() const { return coins_; }

  private:
    int radix_;
    int finest_ = 0;
    std::vector<Coin> coins_;
    std::vector<std::vector<Coin>> groups_;
    std::vector<std::vector<std::uint32_t>> positions_;
    ExactWidth total_;
    u128 target_units_ = 0;
};

struct PackageRecord {
    int width_exp = 0;
    std::vector<int> part_width_exps;
};

struct CoinSelection {
    std::vector<std::uint32_t> ids;  // sorted ascending
    double total_weight = 0.0;
    detail::SweepStats stats;
    std::vector<PackageRecord> packages;  // filled when requested
};

// Throws NoSolution when no subset has exactly the target width.
CoinSelection package_merge(const CoinProblem& problem, bool record_packages = false);

// True iff the coins with these ids have widths summing exactly to the target.
bool verify_selection(const CoinProblem& problem, std::span<const std::uint32_t> ids);

}  // namespace lbpc

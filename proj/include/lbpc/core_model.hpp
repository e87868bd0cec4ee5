#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbpc {

using u128 = unsigned __int128;

// Codeword lengths in sorted-weight order (heaviest symbol first).
using LengthVector = std::vector<int>;

class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Exact width arithmetic would not fit in 128 bits.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A coin collection of the requested total width does not exist.
class NoSolution : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// No prefix code exists with lengths inside the requested bounds.
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Convex, nondecreasing penalty phi applied to (length - min_len).
class Penalty {
  public:
    enum class Kind { Linear, Quadratic, QuadraticShifted, ExponentialShifted, Custom };

    // phi(d) = d + min_len: the cost is the weighted codeword length
    static Penalty linear();
    // phi(d) = d^2
    static Penalty quadratic();
    // phi(d) = (d + min_len)^2
    static Penalty quadratic_shifted();
    // phi(d) = radix^(rate * (d + min_len)), rate > 0
    static Penalty exponential_shifted(double rate);
    static Penalty custom(std::string name, std::function<double(int)> fn);

    Kind kind() const { return kind_; }
    double rate() const { return rate_; }
    const std::string& name() const { return name_; }
    bool is_linear() const { return kind_ == Kind::Linear; }

    double evaluate(int delta, int min_len, int radix) const;

  private:
    Penalty(Kind kind, double rate, std::string name, std::function<double(int)> fn);

    Kind kind_;
    double rate_ = 0.0;
    std::string name_;
    std::function<double(int)> fn_;
};

struct ProblemSpec {
    std::vector<double> weights;
    int radix = 2;
    int min_len = 0;
    int max_len = 1;
    Penalty penalty = Penalty::linear();
};

enum class BoundsClass { TrivialMin, Infeasible, Nontrivial };

const char* to_string(BoundsClass c);

// Number of zero-weight symbols appended so that the padded count is 1 mod (radix - 1).
std::size_t dummy_count(std::size_t n, int radix);

// ceil((n - 1) / (radix - 1)): no full code tree over n leaves is deeper.
int hard_max_length(std::size_t n, int radix);

// Smallest l with radix^l >= n.
int ceil_log(std::size_t n, int radix);
// Largest l with radix^l <= n (n >= 1).
int floor_log(std::size_t n, int radix);

// radix^e, or 0 when it does not fit in 128 bits.
u128 checked_pow(int radix, int e);

std::string to_string(u128 v);

// Normalized problem: weights sorted nonincreasing with zero-weight dummies
// appended, bounds classified, max length clamped, penalty tabulated.
class Instance {
  public:
    static Instance build(const ProblemSpec& spec);

    std::span<const double> weights() const { return weights_; }
    double weight(std::size_t i) const { return weights_[i]; }
    std::size_t real_count() const { return real_count_; }
    std::size_t padded_count() const { return weights_.size(); }
    std::size_t dummies() const { return weights_.size() - real_count_; }
    // order()[k] is the caller's index of the k-th heaviest symbol.
    std::span<const std::size_t> order() const { return order_; }

    int radix() const { return radix_; }
    int min_len() const { return min_len_; }
    int requested_max_len() const { return requested_max_len_; }
    // Clamped to the hard bound when nontrivial.
    int max_len() const { return max_len_; }
    BoundsClass bounds() const { return bounds_; }
    const Penalty& penalty() const { return penalty_; }

    // phi(delta) for delta in [0, max_len - min_len].
    double phi(int delta) const { return phi_[static_cast<std::size_t>(delta)]; }
    // phi(delta) - phi(delta - 1) for delta in [1, max_len - min_len].
    double delta_phi(int delta) const { return phi_[static_cast<std::size_t>(delta)] - phi_[static_cast<std::size_t>(delta) - 1]; }

    // Width of one node on `level`, in units of radix^-max_len.
    u128 unit(int level) const { return pow_table_.at(static_cast<std::size_t>(max_len_ - level)); }
    // (n - D^min_len) / (D - 1): internal vertices at levels [min_len, max_len].
    std::size_t internal_below_min() const;
    // Throws CapacityError unless all nodeset widths fit in 128-bit units.
    void require_width_capacity() const;

    // Same weights and penalty with different bounds; skips re-sorting.
    Instance with_bounds(int min_len, int max_len) const;
    Instance with_bounds(int min_len, int max_len, Penalty penalty) const;

  private:
    Instance() = default;
    void classify_and_tabulate();

    std::vector<double> weights_;
    std::vector<std::size_t> order_;
    std::size_t real_count_ = 0;
    int radix_ = 2;
    int min_len_ = 0;
    int requested_max_len_ = 1;
    int max_len_ = 1;
    BoundsClass bounds_ = BoundsClass::Nontrivial;
    Penalty penalty_ = Penalty::linear();
    std::vector<double> phi_;
    std::vector<u128> pow_table_;
    bool width_capacity_ = false;
};

BoundsClass classify_bounds(const Instance& inst);

struct Rational {
    u128 num = 0;
    u128 den = 1;

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// Exact sum of radix^-l over `lengths`.
Rational kraft_sum(std::span<const int> lengths, int radix);

// Sum of w_i * phi(l_i - min_len) over padded symbols. Lengths outside the
// instance bounds are a contract violation (std::invalid_argument).
double penalty_cost(const Instance& inst, std::span<const int> lengths);

// All lengths min_len: the answer for TrivialMin bounds.
LengthVector fixed_length_code(const Instance& inst);

// Longest minus shortest length; pass only the non-dummy entries.
int fringe(std::span<const int> lengths);

}  // namespace lbpc

#include "lbpc/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace lbpc {

namespace {

constexpr u128 kU128Max = ~static_cast<u128>(0);

bool mul_overflows(u128 a, u128 b) { return a != 0 && b > kU128Max / a; }

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Penalty::Penalty(Kind kind, double rate, std::string name, std::function<double(int)> fn)
    : kind_(kind), rate_(rate), name_(std::move(name)), fn_(std::move(fn)) {}

Penalty Penalty::linear() { return Penalty(Kind::Linear, 0.0, "linear", {}); }
Penalty Penalty::quadratic() { return Penalty(Kind::Quadratic, 0.0, "quadratic", {}); }
Penalty Penalty::quadratic_shifted() { return Penalty(Kind::QuadraticShifted, 0.0, "quadratic-shifted", {}); }

Penalty Penalty::exponential_shifted(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw InvalidInput("exponential penalty rate must be a positive finite number");
    }
    return Penalty(Kind::ExponentialShifted, rate, "exp:" + std::to_string(rate), {});
}

Penalty Penalty::custom(std::string name, std::function<double(int)> fn) {
    if (!fn) {
        throw InvalidInput("custom penalty needs a callable");
    }
    return Penalty(Kind::Custom, 0.0, std::move(name), std::move(fn));
}

double Penalty::evaluate(int delta, int min_len, int radix) const {
    const double d = delta;
    switch (kind_) {
        case Kind::Linear:
            return d + min_len;
        case Kind::Quadratic:
            return d * d;
        case Kind::QuadraticShifted: {
            const double s = d + min_len;
            return s * s;
        }
        case Kind::ExponentialShifted:
            return std::pow(static_cast<double>(radix), rate_ * (d + min_len));
        case Kind::Custom:
            return fn_(delta);
    }
    return d;
}

const char* to_string(BoundsClass c) {
    switch (c) {
        case BoundsClass::TrivialMin:
            return "trivial-min";
        case BoundsClass::Infeasible:
            return "infeasible";
        case BoundsClass::Nontrivial:
            return "nontrivial";
    }
    return "?";
}

std::size_t dummy_count(std::size_t n, int radix) {
    // (D - n) mod (D - 1) with a nonnegative remainder.
    const auto m = static_cast<long long>(radix) - 1;
    long long r = (static_cast<long long>(radix) - static_cast<long long>(n)) % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

int hard_max_length(std::size_t n, int radix) {
    if (n <= 1) return 0;
    const std::size_t m = static_cast<std::size_t>(radix) - 1;
    return static_cast<int>((n - 1 + m - 1) / m);
}

u128 checked_pow(int radix, int e) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) {
        if (mul_overflows(r, static_cast<u128>(radix))) return 0;
        r *= static_cast<u128>(radix);
    }
    return r;
}

int ceil_log(std::size_t n, int radix) {
    int l = 0;
    u128 p = 1;
    while (p < n) {
        p *= static_cast<u128>(radix);
        ++l;
    }
    return l;
}

int floor_log(std::size_t n, int radix) {
    int l = 0;
    u128 p = static_cast<u128>(radix);
    while (p <= n) {
        p *= static_cast<u128>(radix);
        ++l;
    }
    return l;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Instance Instance::build(const ProblemSpec& spec) {
    if (spec.weights.empty()) throw InvalidInput("at least one weight is required");
    if (spec.radix < 2 || spec.radix > (1 << 20)) throw InvalidInput("radix must be in [2, 2^20]");
    if (spec.min_len < 0) throw InvalidInput("minimum length must be nonnegative");
    if (spec.max_len < spec.min_len) throw InvalidInput("maximum length is below minimum length");
    for (double w : spec.weights) {
        if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput("weights must be positive and finite");
    }

    Instance inst;
    inst.radix_ = spec.radix;
    inst.min_len_ = spec.min_len;
    inst.requested_max_len_ = spec.max_len;
    inst.penalty_ = spec.penalty;
    inst.real_count_ = spec.weights.size();

    inst.order_.resize(spec.weights.size());
    std::iota(inst.order_.begin(), inst.order_.end(), std::size_t{0});
    std::stable_sort(inst.order_.begin(), inst.order_.end(),
                     [&](std::size_t a, std::size_t b) { return spec.weights[a] > spec.weights[b]; });

    const std::size_t pad = dummy_count(spec.weights.size(), spec.radix);
    inst.weights_.reserve(spec.weights.size() + pad);
    for (std::size_t k : inst.order_) inst.weights_.push_back(spec.weights[k]);
    inst.weights_.insert(inst.weights_.end(), pad, 0.0);

    inst.classify_and_tabulate();
    return inst;
}

Instance Instance::with_bounds(int min_len, int max_len, Penalty penalty) const {
    if (min_len < 0 || max_len < min_len) throw InvalidInput("invalid length bounds");
    Instance inst = *this;
    inst.min_len_ = min_len;
    inst.requested_max_len_ = max_len;
    inst.penalty_ = std::move(penalty);
    inst.classify_and_tabulate();
    return inst;
}

Instance Instance::with_bounds(int min_len, int max_len) const {
    if (min_len < 0 || max_len < min_len) throw InvalidInput("invalid length bounds");
    Instance inst = *this;
    inst.min_len_ = min_len;
    inst.requested_max_len_ = max_len;
    inst.classify_and_tabulate();
    return inst;
}

void Instance::classify_and_tabulate() {
    const std::size_t n = padded_count();
    const u128 min_pow = checked_pow(radix_, min_len_);
    const u128 max_pow = checked_pow(radix_, requested_max_len_);

    max_len_ = requested_max_len_;
    if (min_pow == 0 || min_pow >= n) {
        bounds_ = BoundsClass::TrivialMin;
    } else if (max_pow != 0 && max_pow < n) {
        bounds_ = BoundsClass::Infeasible;
    } else {
        bounds_ = BoundsClass::Nontrivial;
        max_len_ = std::min(requested_max_len_, hard_max_length(n, radix_));
    }

    const int span = bounds_ == BoundsClass::Nontrivial ? max_len_ - min_len_ : 0;
    phi_.assign(static_cast<std::size_t>(span) + 1, 0.0);
    for (int d = 0; d <= span; ++d) {
        const double v = penalty_.evaluate(d, min_len_, radix_);
        if (!std::isfinite(v)) throw InvalidInput("penalty value overflows at delta " + std::to_string(d));
        phi_[static_cast<std::size_t>(d)] = v;
    }
    for (int d = 1; d <= span; ++d) {
        const double step = delta_phi(d);
        if (step < 0.0) throw InvalidInput("penalty must be nondecreasing");
        if (d >= 2 && step < delta_phi(d - 1)) throw InvalidInput("penalty must be convex");
    }

    pow_table_.clear();
    width_capacity_ = false;
    if (bounds_ != BoundsClass::Nontrivial) return;
    u128 p = 1;
    pow_table_.push_back(p);
    bool fits = true;
    for (int e = 1; e <= span; ++e) {
        if (mul_overflows(p, static_cast<u128>(radix_))) {
            fits = false;
            break;
        }
        p *= static_cast<u128>(radix_);
        pow_table_.push_back(p);
    }
    // Every nodeset width is below n * D^(max-min) units.
    width_capacity_ = fits && !mul_overflows(p, static_cast<u128>(n) * static_cast<u128>(radix_));
}

std::size_t Instance::internal_below_min() const {
    const u128 min_pow = checked_pow(radix_, min_len_);
    return static_cast<std::size_t>((static_cast<u128>(padded_count()) - min_pow) / static_cast<u128>(radix_ - 1));
}

void Instance::require_width_capacity() const {
    if (bounds_ != BoundsClass::Nontrivial) return;
    if (!width_capacity_) {
        throw CapacityError("radix^(max_len - min_len) * n exceeds 128-bit exact width arithmetic (radix " +
                            std::to_string(radix_) + ", lengths " + std::to_string(min_len_) + ".." +
                            std::to_string(max_len_) + ")");
    }
}

BoundsClass classify_bounds(const Instance& inst) { return inst.bounds(); }

std::string Rational::str() const { return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den); }

Rational kraft_sum(std::span<const int> lengths, int radix) {
    if (lengths.empty()) return Rational{0, 1};
    const int longest = *std::max_element(lengths.begin(), lengths.end());
    const u128 den = checked_pow(radix, longest);
    if (den == 0) throw CapacityError("Kraft denominator exceeds 128 bits");
    u128 num = 0;
    for (int l : lengths) {
        if (l < 0) throw std::invalid_argument("negative codeword length");
        const u128 term = den / checked_pow(radix, l);
        if (num > kU128Max - term) throw CapacityError("Kraft numerator exceeds 128 bits");
        num += term;
    }
    const u128 g = gcd(num, den);
    return Rational{num / g, den / g};
}

double penalty_cost(const Instance& inst, std::span<const int> lengths) {
    if (lengths.size() != inst.padded_count()) throw std::invalid_argument("length vector has the wrong size");
    const int lo = inst.min_len();
    const int hi = inst.bounds() == BoundsClass::Nontrivial ? inst.max_len() : inst.min_len();
    double cost = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] < lo || lengths[i] > hi) throw std::invalid_argument("codeword length outside bounds");
        cost += inst.weight(i) * inst.phi(lengths[i] - lo);
    }
    return cost;
}

LengthVector fixed_length_code(const Instance& inst) { return LengthVector(inst.padded_count(), inst.min_len()); }

int fringe(std::span<const int> lengths) {
    if (lengths.empty()) throw std::invalid_argument("fringe of an empty code");
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    return *hi - *lo;
}

}  // namespace lbpc

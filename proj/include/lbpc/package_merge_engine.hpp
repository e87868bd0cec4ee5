#pragma once

// Width-ascending Package-Merge sweep shared by the generic coin collector,
// the full bounded coder and the four-attribute linear-space variant. All of
// them must break ties identically, so the merge order lives here only.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "lbpc/core_model.hpp"

namespace lbpc::detail {

// Base-radix digits of `value`, least significant (narrowest width class) first.
inline std::vector<unsigned> base_digits(u128 value, int radix) {
    std::vector<unsigned> digits;
    while (value != 0) {
        digits.push_back(static_cast<unsigned>(value % static_cast<u128>(radix)));
        value /= static_cast<u128>(radix);
    }
    return digits;
}

struct SweepStats {
    std::size_t classes = 0;
    std::size_t atoms_read = 0;
    std::size_t packages_formed = 0;
    // Largest (atoms + carried packages) count seen in one width class.
    std::size_t peak_live = 0;
};

// Runs Package-Merge over width classes c = 0, 1, ... where class c items have
// width radix^c target units and digits[c] is the target's c-th digit.
//
// Source must provide:
//   std::size_t classes() const;             classes that carry atomic coins
//   std::size_t count(std::size_t c) const;  atoms in class c
//   Item atom(std::size_t c, std::size_t k); k-th atom, ascending by (weight, id)
// weight_of(item) -> double, combine(span<const Item> of radix parts) -> Item,
// take(const Item&) receives every selected item.
//
// Merge order inside a class: ascending weight, atoms before packages on
// equal weight, atoms by their source order, packages by creation order.
template <class Item, class Source, class WeightOf, class Combine, class Take>
SweepStats package_merge_sweep(std::span<const unsigned> digits, int radix, Source& source, WeightOf weight_of,
                               Combine combine, Take take) {
    SweepStats stats;
    std::size_t top = digits.size();
    while (top > 0 && digits[top - 1] == 0) --top;

    std::vector<Item> carried;
    std::vector<Item> next;
    std::vector<Item> parts;
    parts.reserve(static_cast<std::size_t>(radix));

    for (std::size_t c = 0; c < top; ++c) {
        ++stats.classes;
        const std::size_t atoms = c < source.classes() ? source.count(c) : 0;
        stats.peak_live = std::max(stats.peak_live, atoms + carried.size());

        std::size_t ia = 0;
        std::size_t ip = 0;
        bool atom_ready = false;
        Item atom_head{};
        auto peek_atom = [&]() -> const Item* {
            if (ia >= atoms) return nullptr;
            if (!atom_ready) {
                atom_head = source.atom(c, ia);
                atom_ready = true;
            }
            return &atom_head;
        };
        auto pop = [&](Item& out) -> bool {
            const Item* a = peek_atom();
            if (a != nullptr && (ip >= carried.size() || weight_of(*a) <= weight_of(carried[ip]))) {
                out = *a;
                ++ia;
                ++stats.atoms_read;
                atom_ready = false;
                return true;
            }
            if (ip < carried.size()) {
                out = carried[ip++];
                return true;
            }
            return false;
        };

        Item item{};
        for (unsigned t = 0; t < digits[c]; ++t) {
            if (!pop(item)) throw NoSolution("not enough items to cover the target width");
            take(item);
        }
        if (c + 1 == top) break;

        next.clear();
        const std::size_t remaining = (atoms - ia) + (carried.size() - ip);
        const std::size_t groups = remaining / static_cast<std::size_t>(radix);
        next.reserve(groups);
        for (std::size_t g = 0; g < groups; ++g) {
            parts.clear();
            for (int k = 0; k < radix; ++k) {
                pop(item);
                parts.push_back(item);
            }
            next.push_back(combine(std::span<const Item>(parts)));
        }
        stats.packages_formed += groups;
        carried.swap(next);
        if (carried.empty() && c + 1 >= source.classes()) {
            throw NoSolution("no items left for wider width classes");
        }
    }
    return stats;
}

}  // namespace lbpc::detail

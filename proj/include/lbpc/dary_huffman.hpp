#pragma once

#include <span>

#include "lbpc/core_model.hpp"

namespace lbpc {

// Radix-ary Huffman merging on padded weights sorted nonincreasing, stopped
// once radix^min_len trees remain; those roots take every min_len-digit
// prefix. Two FIFO queues (singles, merged); ties pop singles first.
// radix^min_len above the weight count throws std::domain_error (use a
// fixed-length code instead).
LengthVector truncated_huffman(std::span<const double> padded_weights, int radix, int min_len);

// Plain bottom-merge Huffman: truncated_huffman with min_len 0.
LengthVector bottom_merge_huffman(std::span<const double> padded_weights, int radix);

struct Precheck {
    enum class Verdict { Accept, MustHitMax };
    Verdict verdict = Verdict::Accept;
    // The truncated Huffman code; optimal for the bounded problem on Accept.
    LengthVector lengths;
};

// Linear penalty only. MustHitMax means some optimal bounded code uses max_len.
Precheck precheck_lmax(const Instance& inst);

}  // namespace lbpc

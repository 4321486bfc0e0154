#pragma once

#include <cstdint>

#include "dtl/errors.hpp"

namespace dtl {

struct SecParams {
    unsigned lambda_bits = 128;          // key material size; digests stay 256-bit
    unsigned tree_depth = 20;            // accumulator depth d, capacity 2^d
    unsigned root_window_k = 30;         // size of the recent-root ring
    unsigned plaintext_range_bits = 32;  // homomorphic plaintext range and predicate P

    unsigned lambda_bytes() const { return lambda_bits / 8; }

    std::uint64_t leaf_capacity() const {
        return tree_depth >= 64 ? ~0ull : (1ull << tree_depth);
    }

    // Upper bound (exclusive) for data, amounts and vote powers.
    std::uint64_t plaintext_bound() const { return 1ull << plaintext_range_bits; }

    void validate() const {
        if (lambda_bits < 128 || lambda_bits % 8 != 0)
            raise(Errc::range_violation, "lambda_bits must be >= 128 and byte-aligned");
        if (tree_depth < 1 || tree_depth > 32)
            raise(Errc::range_violation, "tree_depth must be in [1, 32]");
        if (root_window_k < 1)
            raise(Errc::range_violation, "root_window_k must be >= 1");
        if (plaintext_range_bits < 1 || plaintext_range_bits > 40)
            raise(Errc::range_violation, "plaintext_range_bits must be in [1, 40]");
    }
};

}  // namespace dtl

#pragma once

#include <vector>

#include "dtl/bytes.hpp"
#include "dtl/params.hpp"

namespace dtl {

// Succinct accumulator state: the root together with how many leaves it
// covers. Two states are interchangeable only if both fields match.
struct AccumulatorState {
    Digest root{};
    std::uint64_t leaf_count = 0;

    auto operator<=>(const AccumulatorState&) const = default;
};

// Authentication path, siblings ordered leaf-to-root.
struct MerklePath {
    std::uint64_t index = 0;
    std::vector<Digest> siblings;
};

// Roots of all-default subtrees per level; entry 0 is the default leaf,
// entry depth the root of an empty tree.
const std::vector<Digest>& empty_subtree_roots(unsigned depth);

AccumulatorState mt_build(std::span<const CoinPublicKey> leaves, unsigned depth);

MerklePath mt_prove(std::uint64_t index, const CoinPublicKey& leaf,
                    std::span<const CoinPublicKey> leaves, unsigned depth);

// Root and authentication path from one pass over the leaves; equal to
// (mt_build, mt_prove) computed separately.
std::pair<AccumulatorState, MerklePath> mt_build_with_path(
    std::span<const CoinPublicKey> leaves, unsigned depth, std::uint64_t index);

bool mt_verify(std::uint64_t index, const CoinPublicKey& leaf, const Digest& root,
               const MerklePath& path);

// Append-only tree giving O(depth) per-insert root updates; matches
// mt_build over the inserted sequence at every step. Single writer.
class IncrementalTree {
public:
    explicit IncrementalTree(unsigned depth);

    void insert(const CoinPublicKey& leaf);
    AccumulatorState state() const { return {root_, leaf_count_}; }
    std::uint64_t leaf_count() const { return leaf_count_; }
    unsigned depth() const { return depth_; }

private:
    unsigned depth_;
    std::uint64_t leaf_count_ = 0;
    Digest root_{};
    std::vector<Digest> filled_;  // left-sibling digest per level
};

}  // namespace dtl

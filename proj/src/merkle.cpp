#include "dtl/merkle.hpp"

#include <map>
#include <mutex>

#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

namespace {

constexpr const char kEmptyLeafLabel[] = "dtl.empty-leaf";

Digest leaf_hash(const CoinPublicKey& leaf) {
    return hash(Domain::mt_leaf, leaf.bytes);
}

Digest node_hash(const Digest& left, const Digest& right) {
    return hash2(Domain::mt_node, left, right);
}

void check_depth(unsigned depth) {
    if (depth < 1 || depth > 32) raise(Errc::range_violation, "tree depth out of range");
}

// Per-level node digests over occupied positions only; unoccupied
// positions are the all-default subtree roots.
std::vector<std::vector<Digest>> build_levels(std::span<const CoinPublicKey> leaves,
                                              unsigned depth) {
    const auto& zero = empty_subtree_roots(depth);
    std::vector<std::vector<Digest>> levels(depth + 1);
    levels[0].reserve(leaves.size());
    for (const auto& leaf : leaves) levels[0].push_back(leaf_hash(leaf));
    for (unsigned lvl = 0; lvl < depth; ++lvl) {
        const auto& cur = levels[lvl];
        auto& next = levels[lvl + 1];
        next.reserve((cur.size() + 1) / 2);
        for (std::size_t j = 0; j * 2 < cur.size(); ++j) {
            const Digest& left = cur[j * 2];
            const Digest& right = (j * 2 + 1 < cur.size()) ? cur[j * 2 + 1] : zero[lvl];
            next.push_back(node_hash(left, right));
        }
    }
    return levels;
}

}  // namespace

const std::vector<Digest>& empty_subtree_roots(unsigned depth) {
    check_depth(depth);
    static std::mutex mu;
    static std::map<unsigned, std::vector<Digest>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(depth);
    if (it != cache.end()) return it->second;
    std::vector<Digest> zero(depth + 1);
    zero[0] = hash(Domain::mt_empty,
                   ByteView(reinterpret_cast<const std::uint8_t*>(kEmptyLeafLabel),
                            sizeof(kEmptyLeafLabel) - 1));
    for (unsigned lvl = 0; lvl < depth; ++lvl) zero[lvl + 1] = node_hash(zero[lvl], zero[lvl]);
    return cache.emplace(depth, std::move(zero)).first->second;
}

AccumulatorState mt_build(std::span<const CoinPublicKey> leaves, unsigned depth) {
    check_depth(depth);
    if (depth < 64 && leaves.size() > (1ull << depth))
        raise(Errc::tree_full, "leaf list exceeds tree capacity");
    if (leaves.empty()) return {empty_subtree_roots(depth)[depth], 0};
    auto levels = build_levels(leaves, depth);
    return {levels[depth][0], leaves.size()};
}

namespace {

MerklePath path_from_levels(const std::vector<std::vector<Digest>>& levels,
                            std::uint64_t index, unsigned depth) {
    const auto& zero = empty_subtree_roots(depth);
    MerklePath path;
    path.index = index;
    path.siblings.reserve(depth);
    std::uint64_t pos = index;
    for (unsigned lvl = 0; lvl < depth; ++lvl) {
        std::uint64_t sib = pos ^ 1;
        path.siblings.push_back(sib < levels[lvl].size() ? levels[lvl][sib] : zero[lvl]);
        pos >>= 1;
    }
    return path;
}

}  // namespace

MerklePath mt_prove(std::uint64_t index, const CoinPublicKey& leaf,
                    std::span<const CoinPublicKey> leaves, unsigned depth) {
    (void)leaf;  // the path depends on position only
    check_depth(depth);
    if (index >= leaves.size()) raise(Errc::index_error, "proof index out of range");
    auto levels = build_levels(leaves, depth);
    return path_from_levels(levels, index, depth);
}

std::pair<AccumulatorState, MerklePath> mt_build_with_path(
    std::span<const CoinPublicKey> leaves, unsigned depth, std::uint64_t index) {
    check_depth(depth);
    if (depth < 64 && leaves.size() > (1ull << depth))
        raise(Errc::tree_full, "leaf list exceeds tree capacity");
    if (index >= leaves.size()) raise(Errc::index_error, "proof index out of range");
    auto levels = build_levels(leaves, depth);
    AccumulatorState st{levels[depth].empty() ? empty_subtree_roots(depth)[depth]
                                              : levels[depth][0],
                        leaves.size()};
    return {st, path_from_levels(levels, index, depth)};
}

bool mt_verify(std::uint64_t index, const CoinPublicKey& leaf, const Digest& root,
               const MerklePath& path) {
    unsigned depth = static_cast<unsigned>(path.siblings.size());
    if (depth < 1 || depth > 32) return false;
    if (index != path.index) return false;
    if (depth < 64 && index >= (1ull << depth)) return false;
    Digest cur = leaf_hash(leaf);
    std::uint64_t pos = index;
    for (unsigned lvl = 0; lvl < depth; ++lvl) {
        const Digest& sib = path.siblings[lvl];
        cur = (pos & 1) ? node_hash(sib, cur) : node_hash(cur, sib);
        pos >>= 1;
    }
    return cur == root;
}

IncrementalTree::IncrementalTree(unsigned depth) : depth_(depth), filled_(depth) {
    check_depth(depth);
    root_ = empty_subtree_roots(depth)[depth];
}

void IncrementalTree::insert(const CoinPublicKey& leaf) {
    if (leaf_count_ >= (1ull << depth_)) raise(Errc::tree_full, "incremental tree full");
    const auto& zero = empty_subtree_roots(depth_);
    Digest cur = leaf_hash(leaf);
    std::uint64_t pos = leaf_count_;
    for (unsigned lvl = 0; lvl < depth_; ++lvl) {
        if ((pos & 1) == 0) {
            filled_[lvl] = cur;
            cur = node_hash(cur, zero[lvl]);
        } else {
            cur = node_hash(filled_[lvl], cur);
        }
        pos >>= 1;
    }
    root_ = cur;
    ++leaf_count_;
}

}  // namespace dtl

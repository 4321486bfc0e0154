#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dtl {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// 256-bit digest. Digests are never truncated, independent of lambda.
using Digest = std::array<std::uint8_t, 32>;

// Committed leaf of the accumulator. In fixed mode this is TagKGen(csk),
// in arbitrary mode Commit(data, TagKGen(csk)).
struct CoinPublicKey {
    Digest bytes{};
    auto operator<=>(const CoinPublicKey&) const = default;
};

// Deterministic nullifier revealed at redemption; depends on k only.
struct Tag {
    Digest bytes{};
    auto operator<=>(const Tag&) const = default;
};

std::string to_hex(ByteView data);
Bytes from_hex(const std::string& hex);

inline Bytes to_bytes(ByteView v) { return Bytes(v.begin(), v.end()); }

}  // namespace dtl

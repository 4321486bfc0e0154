#pragma once

#include <optional>

#include "dtl/bytes.hpp"
#include "dtl/hash.hpp"
#include "dtl/params.hpp"

namespace dtl {

// Redemption secret. k keys the PRF, r randomizes the public key, data is
// present only for arbitrary-data coins.
struct CoinSecret {
    Bytes k;
    Bytes r;
    std::optional<std::uint64_t> data;

    auto operator<=>(const CoinSecret&) const = default;
};

// Domain-separated keyed hash modeled as a random oracle. The key must be
// exactly lambda_bits/8 bytes; output is a full 256-bit digest.
Digest prf_eval(Domain domain, ByteView key, ByteView input, const SecParams& sec);

// Tagging scheme: cpk = F(k, r) under the key-derivation domain,
// tag = F(k, 0^lambda) under the tag domain. The tag ignores r, so all
// coins sharing k share one tag.
CoinPublicKey tag_kgen(const CoinSecret& csk, const SecParams& sec);
Tag tag_eval(const CoinSecret& csk, const SecParams& sec);

}  // namespace dtl

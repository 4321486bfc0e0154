#pragma once

#include "dtl/bytes.hpp"
#include "dtl/params.hpp"

namespace dtl {

// Hash commitment over (data, randomness) in the random-oracle model.
// Binding and hiding follow from the hash; randomness is the 256-bit
// digest used as opening (in the tumbler, cpk' = TagKGen(csk)).
CoinPublicKey commit(std::uint64_t data, const Digest& randomness, const SecParams& sec);

// Returns 1 iff cm opens to (data, randomness); never throws.
bool commit_verify(std::uint64_t data, const CoinPublicKey& cm, const Digest& randomness,
                   const SecParams& sec);

}  // namespace dtl

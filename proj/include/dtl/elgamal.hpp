#pragma once

#include "dtl/group.hpp"
#include "dtl/params.hpp"

namespace dtl {

struct HomKeypair {
    Scalar dk{};
    GroupElement ek{};
};

// Exponential ElGamal: c1 = G^r, c2 = G^m * ek^r. Component-wise group
// addition adds plaintexts; negation subtracts them (Burn).
struct HomCiphertext {
    GroupElement c1{};
    GroupElement c2{};

    auto operator<=>(const HomCiphertext&) const = default;
};

GroupElement hom_derive(const Scalar& dk);

// Deterministic keypair from seed bytes.
HomKeypair hom_kgen(ByteView seed);
HomKeypair hom_kgen(Rng& rng);

HomCiphertext hom_enc(const GroupElement& ek, std::uint64_t m, const Scalar& r_enc,
                      const SecParams& sec);

// Baby-step/giant-step discrete log over [0, 2^plaintext_range_bits).
// Throws DecodeFailure when the plaintext is outside the range.
std::uint64_t hom_dec(const Scalar& dk, const HomCiphertext& c, const SecParams& sec);

// O(1) check that c decrypts to a known candidate under dk.
bool hom_decrypts_to(const Scalar& dk, const HomCiphertext& c, std::uint64_t m);

HomCiphertext hom_add(const HomCiphertext& a, const HomCiphertext& b);
HomCiphertext hom_neg(const HomCiphertext& c);

// Encryption of zero with zero randomness; additive identity.
HomCiphertext hom_zero();

}  // namespace dtl

#pragma once

#include <optional>
#include <utility>

#include "dtl/nizk.hpp"

namespace dtl {

enum class Mode : std::uint8_t {
    fixed = 0,      // all coins carry the same default data
    arbitrary = 1,  // each coin commits to private data, revealed encrypted
};

struct DtlParams {
    Mode mode = Mode::fixed;
    SecParams sec;
    NizkKeys keys;
    std::optional<std::uint64_t> fixed_data;  // present iff mode == fixed
};

struct RedeemResult {
    Tag tag;
    Proof proof;
    std::optional<HomCiphertext> ciphertext;  // present iff mode == arbitrary
};

// Deterministic from seed; runs the NIZK setup for the mode's relation.
DtlParams dtl_setup(Mode mode, const SecParams& sec, ByteView seed,
                    std::optional<std::uint64_t> fixed_data = {});

// Fixed mode: cpk = TagKGen(csk) with csk = (k, r).
// Arbitrary mode: cpk = Commit(data, TagKGen((k, r))) with csk = (k, r, data).
std::pair<CoinPublicKey, CoinSecret> dtl_create(const DtlParams& params, Rng& rng,
                                                std::optional<std::uint64_t> data = {});

// Mode-aware cpk derivation from an existing secret.
CoinPublicKey coin_public_key(const DtlParams& params, const CoinSecret& csk);

AccumulatorState dtl_accumulate(const DtlParams& params,
                                std::span<const CoinPublicKey> cpks);

// Returns nullopt when the csk-derived cpk is not in the list. The state is
// recomputed internally from the list, never trusted from the caller. In
// arbitrary mode m must begin with the recipient ek and rng supplies r_enc.
std::optional<RedeemResult> dtl_redeem(const DtlParams& params,
                                       std::span<const CoinPublicKey> cpks,
                                       const CoinSecret& csk, ByteView m, Rng& rng);

bool dtl_verify(const DtlParams& params, const AccumulatorState& st, const Tag& tag,
                const Proof& proof, ByteView m,
                const std::optional<HomCiphertext>& c = {});

}  // namespace dtl

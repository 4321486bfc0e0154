#pragma once

#include <functional>
#include <memory>

#include "dtl/scheme.hpp"

namespace dtl {

// Append-only experiment log: C records oracle-created coins, R records
// oracle-issued redemptions.
struct OracleLog {
    struct RedeemRecord {
        AccumulatorState st;
        CoinPublicKey cpk;
        Tag tag;
        Proof proof;
        Bytes m;
        std::optional<HomCiphertext> c;
    };

    std::vector<std::pair<CoinPublicKey, CoinSecret>> created;
    std::vector<RedeemRecord> redeemed;

    bool created_contains(const CoinPublicKey& cpk) const;
    const CoinSecret* secret_of(const CoinPublicKey& cpk) const;
    // Matches the (st, ., tag, ., m) pattern used by the freshness checks.
    bool redeemed_matches(const AccumulatorState& st, const Tag& tag, ByteView m) const;
    bool redeemed_coin(const CoinPublicKey& cpk) const;
};

// CreateO / RedeemO with the coin-ownership guard: redeeming a coin that
// was not created through CreateO yields bottom.
class Oracles {
public:
    Oracles(const DtlParams& params, Rng& rng) : params_(params), rng_(rng) {}

    CoinPublicKey create(std::optional<std::uint64_t> data = {});
    std::optional<RedeemResult> redeem(std::span<const CoinPublicKey> cpks, std::size_t i,
                                       ByteView m);

    const OracleLog& log() const { return log_; }
    Rng& rng() { return rng_; }

    // Set by the unlink challenger; any redeem query naming one of these
    // coins voids the trial.
    void watch(const CoinPublicKey& a, const CoinPublicKey& b);
    bool watched_query() const { return watched_query_; }

private:
    const DtlParams& params_;
    Rng& rng_;
    OracleLog log_;
    std::vector<CoinPublicKey> watched_;
    bool watched_query_ = false;
};

// What an adversary is given. pp carries blanked NIZK keys: adversaries
// never hold prvK. Redeem and Verify are public algorithms of the scheme,
// so the view exposes them as callbacks; under the reference backend they
// route through the trusted-setup registry, which proves only statements
// whose relation holds and never reveals the key.
struct AdversaryView {
    DtlParams pp;
    std::function<std::optional<RedeemResult>(std::span<const CoinPublicKey>,
                                              const CoinSecret&, ByteView, Rng&)>
        redeem;
    std::function<bool(const AccumulatorState&, const Tag&, const Proof&, ByteView,
                       const std::optional<HomCiphertext>&)>
        verify;
};

struct GameOutcome {
    std::string game;
    std::string adversary;
    bool win = false;
    std::uint64_t trials = 1;
    std::uint64_t wins = 0;
    Digest transcript{};
};

// --- adversary interfaces ----------------------------------------------------

struct RedeemTuple {
    Tag tag;
    Proof proof;
    Bytes m;
    std::optional<HomCiphertext> c;
};

struct OneMoreRedeemOutput {
    std::vector<CoinPublicKey> cpks;
    std::vector<RedeemTuple> tuples;  // must hold n+1 verifying entries to win
};

class OneMoreRedeemAdversary {
public:
    virtual ~OneMoreRedeemAdversary() = default;
    virtual std::string name() const = 0;
    // oracles is null in the experiment as written; the oracle-equipped
    // variant passes the live pair.
    virtual OneMoreRedeemOutput run(const AdversaryView& view, Oracles* oracles, Rng& rng) = 0;
};

struct TheftOutput {
    std::vector<CoinPublicKey> cpks;
    RedeemTuple tuple;
};

class TheftAdversary {
public:
    virtual ~TheftAdversary() = default;
    virtual std::string name() const = 0;
    virtual TheftOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) = 0;
};

struct NSlanderOutput {
    CoinPublicKey cpk;       // the victim coin, must come from CreateO
    CoinPublicKey cpk_star;  // the adversary's companion coin
    RedeemTuple tuple;       // (tag*, pi*, m*)
};

class NSlanderAdversary {
public:
    virtual ~NSlanderAdversary() = default;
    virtual std::string name() const = 0;
    virtual NSlanderOutput run(const AdversaryView& view, Oracles& oracles, Rng& rng) = 0;
};

struct UnlinkChallenge {
    CoinPublicKey cpk0;
    CoinPublicKey cpk1;
    RedeemTuple first;   // redemption of coin (0 xor b)
    RedeemTuple second;  // redemption of coin (1 xor b)
    Bytes m;
};

class UnlinkAdversary {
public:
    virtual ~UnlinkAdversary() = default;
    virtual std::string name() const = 0;
    virtual std::pair<std::uint64_t, std::uint64_t> choose_data(const AdversaryView& view,
                                                                ByteView m, Rng& rng) = 0;
    virtual int guess(const AdversaryView& view, const UnlinkChallenge& challenge,
                      Oracles& oracles, Rng& rng) = 0;
};

// --- experiments --------------------------------------------------------------

// A message valid for the params' mode: random bytes, led by a fresh
// encryption key in arbitrary mode.
Bytes random_message(const DtlParams& params, Rng& rng);

GameOutcome run_one_more_redeem(const DtlParams& params, OneMoreRedeemAdversary& adversary,
                                std::uint64_t seed, bool with_oracles = false);

GameOutcome run_theft(const DtlParams& params, TheftAdversary& adversary, std::uint64_t seed);

GameOutcome run_nslander(const DtlParams& params, NSlanderAdversary& adversary,
                         std::uint64_t seed);

struct UnlinkOutcome {
    GameOutcome outcome;
    double advantage = 0.0;
};

UnlinkOutcome run_unlink(const DtlParams& params, UnlinkAdversary& adversary,
                         std::uint64_t seed, std::uint64_t trials);

// --- the shipped attack battery ------------------------------------------------

std::vector<std::unique_ptr<OneMoreRedeemAdversary>> shipped_one_more_adversaries();
std::vector<std::unique_ptr<TheftAdversary>> shipped_theft_adversaries();
std::vector<std::unique_ptr<NSlanderAdversary>> shipped_nslander_adversaries();
std::vector<std::unique_ptr<UnlinkAdversary>> shipped_unlink_adversaries(Mode mode);

}  // namespace dtl

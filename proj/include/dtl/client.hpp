#pragma once

#include "dtl/ledger.hpp"

namespace dtl {

// Client-side builders for the three applications. These mirror the wallet
// procedures: create and store coin secrets, fetch AccHistory from the
// contract, redeem locally, and package the resulting call.

struct ClientCoin {
    CoinPublicKey cpk;
    CoinSecret csk;
};

// --- fixed-amount payment ---------------------------------------------------

ClientCoin create_fixed_coin(const TumblerContract& tumbler, Rng& rng);

Transaction make_fixed_deposit(const Address& sender, std::uint32_t tumbler_id,
                               const TumblerContract& tumbler, const ClientCoin& coin);

Transaction make_fixed_withdraw(const Address& sender, std::uint32_t tumbler_id,
                                const TumblerContract& tumbler, const CoinSecret& csk,
                                const Address& recipient, Rng& rng);

// --- confidential payment ----------------------------------------------------

ClientCoin create_arb_coin(const TumblerContract& tumbler, std::uint64_t amt, Rng& rng);

Transaction make_transparent_deposit(const Address& sender, std::uint32_t tumbler_id,
                                     const TumblerContract& tumbler, const ClientCoin& coin,
                                     std::uint64_t amt);

// Builds c_transfer and the equality proof against the sender's current
// encrypted balance; refuses (UnsatisfiedRelation) when amt exceeds bal.
struct ConfidentialDepositPlan {
    Transaction tx;
    ClientCoin coin;
};
ConfidentialDepositPlan make_confidential_deposit(const Address& sender,
                                                  std::uint32_t tumbler_id,
                                                  const LedgerState& state,
                                                  const Scalar& dk_sender,
                                                  std::uint64_t bal, std::uint64_t amt,
                                                  Rng& rng);

Transaction make_uc_withdraw(const Address& sender, std::uint32_t tumbler_id,
                             const TumblerContract& tumbler, const CoinSecret& csk,
                             const GroupElement& ek_recv, ByteView aux, Rng& rng);

// --- voting -------------------------------------------------------------------

struct VoterRegistration {
    Transaction tx;
    ClientCoin coin;
};
VoterRegistration make_vote_registration(const Address& sender, std::uint32_t vote_id,
                                         const VoteContract& vote, std::uint64_t vote_power,
                                         Rng& rng);

Transaction make_vote(const Address& sender, std::uint32_t vote_id, const VoteContract& vote,
                      const CoinSecret& csk, const GroupElement& ek_candidate, Rng& rng);

// Decrypts the candidate's tally and proves the reveal statement.
Transaction make_reveal(const Address& sender, std::uint32_t vote_id, const VoteContract& vote,
                        const Scalar& dk_candidate);

}  // namespace dtl

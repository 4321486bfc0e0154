#include "dtl/client.hpp"

namespace dtl {

namespace {

// Honest withdrawers build their proof against the full current history.
RedeemResult redeem_from_history(const TumblerState& tum, const CoinSecret& csk, ByteView m,
                                 Rng& rng) {
    auto result = dtl_redeem(tum.params, tum.acc_history, csk, m, rng);
    if (!result) raise(Errc::unknown_account, "coin not present in deposit history");
    return *result;
}

}  // namespace

ClientCoin create_fixed_coin(const TumblerContract& tumbler, Rng& rng) {
    auto [cpk, csk] = dtl_create(tumbler.tum.params, rng);
    return {cpk, csk};
}

Transaction make_fixed_deposit(const Address& sender, std::uint32_t tumbler_id,
                               const TumblerContract& tumbler, const ClientCoin& coin) {
    Transaction tx;
    tx.sender = sender;
    tx.target = tumbler_id;
    tx.value = tumbler.amt_fixed;
    tx.payload = DepositCall{coin.cpk};
    return tx;
}

Transaction make_fixed_withdraw(const Address& sender, std::uint32_t tumbler_id,
                                const TumblerContract& tumbler, const CoinSecret& csk,
                                const Address& recipient, Rng& rng) {
    const TumblerState& tum = tumbler.tum;
    AccumulatorState st = dtl_accumulate(tum.params, tum.acc_history);
    ByteView m(recipient.data(), recipient.size());
    RedeemResult redeemed = redeem_from_history(tum, csk, m, rng);
    Transaction tx;
    tx.sender = sender;
    tx.target = tumbler_id;
    tx.value = 0;
    tx.payload = WithdrawCall{st, redeemed.tag, redeemed.proof, recipient};
    return tx;
}

ClientCoin create_arb_coin(const TumblerContract& tumbler, std::uint64_t amt, Rng& rng) {
    auto [cpk, csk] = dtl_create(tumbler.tum.params, rng, amt);
    return {cpk, csk};
}

Transaction make_transparent_deposit(const Address& sender, std::uint32_t tumbler_id,
                                     const TumblerContract& tumbler, const ClientCoin& coin,
                                     std::uint64_t amt) {
    Transaction tx;
    tx.sender = sender;
    tx.target = tumbler_id;
    tx.value = amt;
    // The contract recomputes cpk = Commit(amt, cpk'), so the deposit
    // carries the inner key only.
    tx.payload = TransparentDepositCall{tag_kgen(coin.csk, tumbler.tum.params.sec).bytes, amt};
    return tx;
}

ConfidentialDepositPlan make_confidential_deposit(const Address& sender,
                                                  std::uint32_t tumbler_id,
                                                  const LedgerState& state,
                                                  const Scalar& dk_sender,
                                                  std::uint64_t bal, std::uint64_t amt,
                                                  Rng& rng) {
    const TumblerContract& tumbler = tumbler_at(state, tumbler_id);
    if (!tumbler.conf_id) raise(Errc::bad_payload, "tumbler has no confidential contract");
    const SecParams& sec = tumbler.tum.params.sec;

    ClientCoin coin = create_arb_coin(tumbler, amt, rng);
    const GroupElement ek_sender = hom_derive(dk_sender);
    const HomCiphertext c_bal = conf_at(state, *tumbler.conf_id).state.read(ek_sender);
    const Scalar r_enc = scalar_random(rng);
    const HomCiphertext c_transfer = hom_enc(ek_sender, amt, r_enc, sec);

    EqualityStmt stmt{c_bal, c_transfer, coin.cpk, ek_sender};
    EqualityWit wit{bal, dk_sender, coin.csk.k, coin.csk.r, amt};
    const NizkKeys& keys = state.registry.get(RelationId::equality);
    Proof proof =
        nizk_prove(keys, sec, RelationId::equality, Statement{stmt}, Witness{wit});

    Transaction tx;
    tx.sender = sender;
    tx.target = tumbler_id;
    tx.value = 0;
    tx.payload = ConfidentialDepositCall{c_transfer, coin.cpk, ek_sender, proof};
    return {tx, coin};
}

Transaction make_uc_withdraw(const Address& sender, std::uint32_t tumbler_id,
                             const TumblerContract& tumbler, const CoinSecret& csk,
                             const GroupElement& ek_recv, ByteView aux, Rng& rng) {
    const TumblerState& tum = tumbler.tum;
    AccumulatorState st = dtl_accumulate(tum.params, tum.acc_history);
    Bytes m(ek_recv.begin(), ek_recv.end());
    m.insert(m.end(), aux.begin(), aux.end());
    RedeemResult redeemed = redeem_from_history(tum, csk, m, rng);
    Transaction tx;
    tx.sender = sender;
    tx.target = tumbler_id;
    tx.value = 0;
    tx.payload = UcWithdrawCall{st, redeemed.tag, redeemed.proof, *redeemed.ciphertext, m};
    return tx;
}

VoterRegistration make_vote_registration(const Address& sender, std::uint32_t vote_id,
                                         const VoteContract& vote, std::uint64_t vote_power,
                                         Rng& rng) {
    auto [cpk, csk] = dtl_create(vote.tum.params, rng, vote_power);
    Transaction tx;
    tx.sender = sender;
    tx.target = vote_id;
    tx.value = 0;
    tx.payload = RegistrationCall{tag_kgen(csk, vote.tum.params.sec).bytes, vote_power};
    return {tx, ClientCoin{cpk, csk}};
}

Transaction make_vote(const Address& sender, std::uint32_t vote_id, const VoteContract& vote,
                      const CoinSecret& csk, const GroupElement& ek_candidate, Rng& rng) {
    const TumblerState& tum = vote.tum;
    AccumulatorState st = dtl_accumulate(tum.params, tum.acc_history);
    ByteView m(ek_candidate.data(), ek_candidate.size());
    RedeemResult redeemed = redeem_from_history(tum, csk, m, rng);
    Transaction tx;
    tx.sender = sender;
    tx.target = vote_id;
    tx.value = 0;
    tx.payload =
        VoteCall{st, redeemed.tag, redeemed.proof, *redeemed.ciphertext, ek_candidate};
    return tx;
}

Transaction make_reveal(const Address& sender, std::uint32_t vote_id, const VoteContract& vote,
                        const Scalar& dk_candidate) {
    const GroupElement ek = hom_derive(dk_candidate);
    const HomCiphertext& c = vote.conf.read(ek);
    const std::uint64_t bal = hom_dec(dk_candidate, c, vote.tum.params.sec);
    RevealStmt stmt{ek, c, bal};
    RevealWit wit{dk_candidate};
    Proof proof = nizk_prove(vote.reveal_keys, vote.tum.params.sec, RelationId::reveal,
                             Statement{stmt}, Witness{wit});
    Transaction tx;
    tx.sender = sender;
    tx.target = vote_id;
    tx.value = 0;
    tx.payload = RevealCall{ek, bal, proof};
    return tx;
}

}  // namespace dtl

#include "dtl/contracts.hpp"

#include "dtl/encode.hpp"
#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

const char* vote_stage_name(VoteStage stage) {
    switch (stage) {
        case VoteStage::setup: return "setup";
        case VoteStage::registration: return "registration";
        case VoteStage::voting: return "voting";
        case VoteStage::reveal: return "reveal";
    }
    return "unknown";
}

void TumblerState::append_leaf(const CoinPublicKey& cpk) {
    if (tree.leaf_count() >= params.sec.leaf_capacity())
        raise(Errc::tree_full, "accumulator is full");
    acc_history.push_back(cpk);
    tree.insert(cpk);
    acc_list_wdr.push_back(tree.state());
    while (acc_list_wdr.size() > params.sec.root_window_k) acc_list_wdr.pop_front();
}

bool TumblerState::window_contains(const AccumulatorState& st) const {
    for (const auto& entry : acc_list_wdr)
        if (entry == st) return true;
    return false;
}

void TumblerState::check_and_spend(const AccumulatorState& st, const Tag& tag,
                                   const Proof& proof, ByteView m,
                                   const std::optional<HomCiphertext>& c) {
    if (!window_contains(st)) raise(Errc::stale_root, "state not in recent-root window");
    if (tag_seen(tag)) raise(Errc::double_redeem, "tag already spent");
    if (!dtl_verify(params, st, tag, proof, m, c))
        raise(Errc::invalid_proof, "redeem proof rejected");
    tag_list.insert(tag);
}

void ConfState::fund(const GroupElement& ek, const HomCiphertext& c) {
    auto it = accounts.find(ek);
    if (it == accounts.end()) {
        accounts.emplace(ek, c);
    } else {
        it->second = hom_add(it->second, c);
    }
}

void ConfState::burn(const GroupElement& ek, const HomCiphertext& c) {
    auto it = accounts.find(ek);
    if (it == accounts.end()) raise(Errc::unknown_account, "burn from unknown account");
    it->second = hom_add(it->second, hom_neg(c));
}

const HomCiphertext& ConfState::read(const GroupElement& ek) const {
    auto it = accounts.find(ek);
    if (it == accounts.end()) raise(Errc::unknown_account, "no such encrypted account");
    return it->second;
}

namespace {

Bytes event_root(const TumblerState& tum, const CoinPublicKey& cpk) {
    AccumulatorState st = tum.tree.state();
    return Encoder().raw(cpk.bytes).raw(st.root).u64(st.leaf_count).take();
}

Bytes event_spend(const Tag& tag) { return Encoder().raw(tag.bytes).take(); }

void tumbler_fixed_call(TumblerContract& self, HostCtx& host, std::uint64_t value,
                        const CallPayload& payload) {
    if (const auto* dep = std::get_if<DepositCall>(&payload)) {
        if (value != self.amt_fixed)
            raise(Errc::amount_mismatch, "deposit must carry amt_fixed");
        self.tum.append_leaf(dep->cpk);
        host.emit("deposit", event_root(self.tum, dep->cpk));
        return;
    }
    if (const auto* wdr = std::get_if<WithdrawCall>(&payload)) {
        if (value != 0) raise(Errc::amount_mismatch, "withdraw carries no value");
        ByteView m(wdr->recipient.data(), wdr->recipient.size());
        self.tum.check_and_spend(wdr->st, wdr->tag, wdr->proof, m, std::nullopt);
        host.pay_from_pool(wdr->recipient, self.amt_fixed);
        host.emit("withdraw", event_spend(wdr->tag));
        return;
    }
    raise(Errc::bad_payload, "call not supported by fixed tumbler");
}

void tumbler_arb_call(TumblerContract& self, HostCtx& host, std::uint64_t value,
                      const CallPayload& payload) {
    const SecParams& sec = self.tum.params.sec;
    if (const auto* dep = std::get_if<TransparentDepositCall>(&payload)) {
        if (value != dep->amt)
            raise(Errc::amount_mismatch, "transparent deposit must carry amt");
        if (dep->amt >= sec.plaintext_bound())
            raise(Errc::range_violation, "deposit amount out of range");
        CoinPublicKey cpk = commit(dep->amt, dep->cpk_prime, sec);
        self.tum.append_leaf(cpk);
        host.emit("deposit", event_root(self.tum, cpk));
        return;
    }
    if (const auto* dep = std::get_if<ConfidentialDepositCall>(&payload)) {
        if (value != 0) raise(Errc::amount_mismatch, "confidential deposit carries no value");
        if (!self.conf_id || !self.equality_keys)
            raise(Errc::bad_payload, "tumbler not wired to a confidential contract");
        ConfState& conf = host.conf_contract(*self.conf_id);
        const HomCiphertext c_bal = conf.read(dep->ek_sender);
        EqualityStmt stmt{c_bal, dep->c_transfer, dep->cpk, dep->ek_sender};
        if (!nizk_verify(*self.equality_keys, RelationId::equality, Statement{stmt},
                         dep->proof))
            raise(Errc::invalid_proof, "equality proof rejected");
        self.tum.append_leaf(dep->cpk);
        conf.burn(dep->ek_sender, dep->c_transfer);
        host.emit("confidential-deposit", event_root(self.tum, dep->cpk));
        return;
    }
    if (const auto* wdr = std::get_if<UcWithdrawCall>(&payload)) {
        if (value != 0) raise(Errc::amount_mismatch, "withdraw carries no value");
        if (!self.conf_id)
            raise(Errc::bad_payload, "tumbler not wired to a confidential contract");
        self.tum.check_and_spend(wdr->st, wdr->tag, wdr->proof, wdr->m, wdr->c);
        GroupElement ek_recv = parse_leading_ek(wdr->m);
        host.conf_contract(*self.conf_id).fund(ek_recv, wdr->c);
        host.emit("uc-withdraw", event_spend(wdr->tag));
        return;
    }
    raise(Errc::bad_payload, "call not supported by arbitrary tumbler");
}

void conf_call(ConfContract& self, HostCtx& host, std::uint64_t value,
               const CallPayload& payload) {
    if (const auto* fund = std::get_if<ConfFundCall>(&payload)) {
        if (value != fund->amt)
            raise(Errc::amount_mismatch, "public funding must escrow its amount");
        if (!ge_is_valid(fund->ek) || ge_is_identity(fund->ek))
            raise(Errc::unknown_account, "invalid account key");
        // Public amount: trivial encryption with zero randomness.
        SecParams wide;  // range check against the widest supported range
        wide.plaintext_range_bits = 40;
        self.state.fund(fund->ek, hom_enc(fund->ek, fund->amt, scalar_zero(), wide));
        host.emit("fund", Encoder().raw(fund->ek).u64(fund->amt).take());
        return;
    }
    raise(Errc::bad_payload, "call not supported by confidential contract");
}

void vote_call(VoteContract& self, HostCtx& host, std::uint64_t value,
               const CallPayload& payload) {
    const SecParams& sec = self.tum.params.sec;
    if (value != 0) raise(Errc::amount_mismatch, "voting calls carry no value");
    if (const auto* reg = std::get_if<RegisterCandidateCall>(&payload)) {
        if (self.stage != VoteStage::setup)
            raise(Errc::wrong_stage, "candidates register during setup");
        if (!ge_is_valid(reg->ek) || ge_is_identity(reg->ek))
            raise(Errc::unknown_account, "invalid candidate key");
        for (const auto& ek : self.candidates)
            if (ek == reg->ek) raise(Errc::duplicate_account, "candidate already registered");
        self.candidates.push_back(reg->ek);
        self.conf.fund(reg->ek, hom_zero());  // tally account starts at zero
        host.emit("register-candidate", Encoder().raw(reg->ek).take());
        return;
    }
    if (std::get_if<AdvanceStageCall>(&payload)) {
        if (self.stage == VoteStage::reveal)
            raise(Errc::wrong_stage, "no stage after reveal");
        self.stage = static_cast<VoteStage>(static_cast<std::uint8_t>(self.stage) + 1);
        host.emit("stage", Encoder().str(vote_stage_name(self.stage)).take());
        return;
    }
    if (const auto* reg = std::get_if<RegistrationCall>(&payload)) {
        if (self.stage != VoteStage::registration)
            raise(Errc::wrong_stage, "voters register during registration");
        if (reg->vote_power >= sec.plaintext_bound())
            raise(Errc::range_violation, "vote power out of range");
        CoinPublicKey cpk = commit(reg->vote_power, reg->cpk_prime, sec);
        self.tum.append_leaf(cpk);
        host.emit("registration", event_root(self.tum, cpk));
        return;
    }
    if (const auto* vote = std::get_if<VoteCall>(&payload)) {
        if (self.stage != VoteStage::voting)
            raise(Errc::wrong_stage, "votes accepted during voting");
        bool known = false;
        for (const auto& ek : self.candidates) known = known || ek == vote->ek_candidate;
        if (!known) raise(Errc::unknown_candidate, "vote for unregistered candidate");
        Bytes m(vote->ek_candidate.begin(), vote->ek_candidate.end());
        self.tum.check_and_spend(vote->st, vote->tag, vote->proof, m, vote->c);
        self.conf.fund(vote->ek_candidate, vote->c);
        host.emit("vote", event_spend(vote->tag));
        return;
    }
    if (const auto* rev = std::get_if<RevealCall>(&payload)) {
        if (self.stage != VoteStage::reveal)
            raise(Errc::wrong_stage, "reveals accepted during reveal");
        const HomCiphertext& c = self.conf.read(rev->ek);
        RevealStmt stmt{rev->ek, c, rev->bal};
        if (!nizk_verify(self.reveal_keys, RelationId::reveal, Statement{stmt}, rev->proof))
            raise(Errc::invalid_proof, "reveal proof rejected");
        self.revealed[rev->ek] = rev->bal;
        host.emit("reveal", Encoder().raw(rev->ek).u64(rev->bal).take());
        return;
    }
    raise(Errc::bad_payload, "call not supported by voting contract");
}

void probe_call(ProbeContract& self, HostCtx& host, const CallPayload& payload) {
    const auto* probe = std::get_if<ProbeCall>(&payload);
    if (!probe) raise(Errc::bad_payload, "probe contract accepts probe calls only");
    self.counter += probe->bump;
    host.emit("probe", Encoder().u32(probe->bump).take());
    if (probe->payout > 0) host.pay_from_pool(probe->payout_to, probe->payout);
    if (probe->fail) raise(Errc::fault_injected, "probe instructed to fail");
}

}  // namespace

void handle_call(ContractBody& body, HostCtx& host, const Address& sender,
                 std::uint64_t value, const CallPayload& payload) {
    (void)sender;  // calls are authorized by proofs, not by sender identity
    std::visit(
        [&](auto& self) {
            using T = std::decay_t<decltype(self)>;
            if constexpr (std::is_same_v<T, TumblerContract>) {
                if (self.tum.params.mode == Mode::fixed)
                    tumbler_fixed_call(self, host, value, payload);
                else
                    tumbler_arb_call(self, host, value, payload);
            } else if constexpr (std::is_same_v<T, ConfContract>) {
                conf_call(self, host, value, payload);
            } else if constexpr (std::is_same_v<T, VoteContract>) {
                vote_call(self, host, value, payload);
            } else {
                probe_call(self, host, payload);
            }
        },
        body);
}

namespace {

void digest_tumbler_state(Hasher& h, const TumblerState& tum) {
    h.u8(static_cast<std::uint8_t>(tum.params.mode));
    h.u64(tum.acc_history.size());
    for (const auto& cpk : tum.acc_history) h.raw(cpk.bytes);
    AccumulatorState st = tum.tree.state();
    h.raw(st.root).u64(st.leaf_count);
    h.u64(tum.acc_list_wdr.size());
    for (const auto& entry : tum.acc_list_wdr) h.raw(entry.root).u64(entry.leaf_count);
    h.u64(tum.tag_list.size());
    for (const auto& tag : tum.tag_list) h.raw(tag.bytes);
}

void digest_conf_state(Hasher& h, const ConfState& conf) {
    h.u64(conf.accounts.size());
    for (const auto& [ek, c] : conf.accounts) h.raw(ek).raw(c.c1).raw(c.c2);
}

}  // namespace

Digest contract_digest(const ContractBody& body) {
    Hasher h(Domain::transcript);
    std::visit(
        [&](const auto& self) {
            using T = std::decay_t<decltype(self)>;
            if constexpr (std::is_same_v<T, TumblerContract>) {
                h.u8(1);
                digest_tumbler_state(h, self.tum);
                h.u64(self.amt_fixed);
            } else if constexpr (std::is_same_v<T, ConfContract>) {
                h.u8(2);
                digest_conf_state(h, self.state);
            } else if constexpr (std::is_same_v<T, VoteContract>) {
                h.u8(3);
                h.u8(static_cast<std::uint8_t>(self.stage));
                h.u64(self.candidates.size());
                for (const auto& ek : self.candidates) h.raw(ek);
                digest_tumbler_state(h, self.tum);
                digest_conf_state(h, self.conf);
                h.u64(self.revealed.size());
                for (const auto& [ek, bal] : self.revealed) h.raw(ek).u64(bal);
            } else {
                h.u8(4);
                h.u64(self.counter);
            }
        },
        body);
    return h.finish();
}

}  // namespace dtl

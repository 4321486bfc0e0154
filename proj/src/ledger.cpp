#include "dtl/ledger.hpp"

#include "dtl/encode.hpp"
#include "dtl/hash.hpp"

namespace dtl {

const NizkKeys& SetupRegistry::get(RelationId rel) const {
    auto it = keys.find(rel);
    if (it == keys.end()) raise(Errc::unknown_contract, "relation not in setup registry");
    return it->second;
}

LedgerState genesis(std::span<const std::pair<Address, std::uint64_t>> accounts) {
    LedgerState state;
    for (const auto& [addr, bal] : accounts) {
        if (!state.balances.emplace(addr, bal).second)
            raise(Errc::duplicate_account, "duplicate genesis address");
    }
    return state;
}

namespace {

class LedgerHost final : public HostCtx {
public:
    LedgerHost(LedgerState& state, std::uint32_t self_id)
        : state_(state), self_id_(self_id) {}

    void emit(const std::string& label, Bytes payload) override {
        state_.events.push_back(Event{self_id_, label, std::move(payload)});
    }

    void pay_from_pool(const Address& to, std::uint64_t amount) override {
        ContractRecord& rec = state_.contracts.at(self_id_);
        if (rec.pool < amount) raise(Errc::insufficient_funds, "contract pool underflow");
        rec.pool -= amount;
        state_.balances[to] += amount;
    }

    std::uint64_t pool() const override { return state_.contracts.at(self_id_).pool; }

    ConfState& conf_contract(std::uint32_t id) override {
        auto it = state_.contracts.find(id);
        if (it == state_.contracts.end())
            raise(Errc::unknown_contract, "no contract at target id");
        auto* conf = std::get_if<ConfContract>(&it->second.body);
        if (!conf) raise(Errc::unknown_contract, "target is not a confidential contract");
        return conf->state;
    }

private:
    LedgerState& state_;
    std::uint32_t self_id_;
};

}  // namespace

std::pair<LedgerState, TxResult> apply_tx(const LedgerState& state, const Transaction& tx) {
    LedgerState next = state;
    next.tx_count += 1;
    try {
        auto sender_it = next.balances.find(tx.sender);
        if (sender_it == next.balances.end())
            raise(Errc::unknown_account, "unknown sender");
        if (sender_it->second < tx.value)
            raise(Errc::insufficient_funds, "sender balance below tx value");

        if (const auto* to = std::get_if<Address>(&tx.target)) {
            if (!std::holds_alternative<TransferCall>(tx.payload))
                raise(Errc::bad_payload, "EOA target accepts plain transfers only");
            sender_it->second -= tx.value;
            next.balances[*to] += tx.value;
            return {std::move(next), TxResult{}};
        }

        std::uint32_t cid = std::get<std::uint32_t>(tx.target);
        auto cit = next.contracts.find(cid);
        if (cit == next.contracts.end())
            raise(Errc::unknown_contract, "no contract at target id");
        sender_it->second -= tx.value;
        cit->second.pool += tx.value;  // escrow before dispatch
        LedgerHost host(next, cid);
        handle_call(cit->second.body, host, tx.sender, tx.value, tx.payload);
        return {std::move(next), TxResult{}};
    } catch (const Error& err) {
        LedgerState unchanged = state;
        unchanged.tx_count += 1;
        return {std::move(unchanged), TxResult{false, err.code(), err.what()}};
    }
}

std::vector<Event> read_events(const LedgerState& state, std::optional<std::uint32_t> contract,
                               std::optional<std::string> label) {
    std::vector<Event> out;
    for (const auto& ev : state.events) {
        if (contract && ev.contract_id != *contract) continue;
        if (label && ev.label != *label) continue;
        out.push_back(ev);
    }
    return out;
}

std::uint64_t total_native(const LedgerState& state) {
    std::uint64_t total = 0;
    for (const auto& [addr, bal] : state.balances) total += bal;
    for (const auto& [id, rec] : state.contracts) total += rec.pool;
    return total;
}

Digest event_log_digest(const LedgerState& state) {
    Hasher h(Domain::transcript);
    h.u64(state.events.size());
    for (const auto& ev : state.events) h.blob(encode_event(ev));
    return h.finish();
}

Digest ledger_digest(const LedgerState& state) {
    Hasher h(Domain::transcript);
    h.u64(state.balances.size());
    for (const auto& [addr, bal] : state.balances) h.raw(addr).u64(bal);
    h.u64(state.contracts.size());
    for (const auto& [id, rec] : state.contracts)
        h.u32(id).u64(rec.pool).raw(contract_digest(rec.body));
    h.u64(state.tx_count);
    h.u32(state.next_contract_id);
    h.raw(event_log_digest(state));
    return h.finish();
}

namespace {

std::uint32_t install(LedgerState& state, ContractBody body) {
    std::uint32_t id = state.next_contract_id++;
    state.contracts.emplace(id, ContractRecord{0, std::move(body)});
    return id;
}

}  // namespace

std::uint32_t deploy_fixed_tumbler(LedgerState& state, const SecParams& sec, ByteView seed,
                                   std::uint64_t amt_fixed) {
    DtlParams params = dtl_setup(Mode::fixed, sec, seed, amt_fixed);
    state.registry.put(params.keys);
    TumblerContract contract{TumblerState(params), amt_fixed, {}, {}};
    return install(state, std::move(contract));
}

std::uint32_t deploy_conf(LedgerState& state) { return install(state, ConfContract{}); }

std::uint32_t deploy_arb_tumbler(LedgerState& state, const SecParams& sec, ByteView seed,
                                 std::uint32_t conf_id) {
    DtlParams params = dtl_setup(Mode::arbitrary, sec, seed);
    NizkKeys equality = nizk_setup(RelationId::equality, seed);
    state.registry.put(params.keys);
    state.registry.put(equality);
    TumblerContract contract{TumblerState(params), 0, conf_id, equality};
    return install(state, std::move(contract));
}

std::uint32_t deploy_vote(LedgerState& state, const SecParams& sec, ByteView seed) {
    DtlParams params = dtl_setup(Mode::arbitrary, sec, seed);
    NizkKeys reveal = nizk_setup(RelationId::reveal, seed);
    state.registry.put(params.keys);
    state.registry.put(reveal);
    VoteContract contract{VoteStage::setup, {}, TumblerState(params), ConfState{}, {}, reveal};
    return install(state, std::move(contract));
}

std::uint32_t deploy_probe(LedgerState& state) { return install(state, ProbeContract{}); }

namespace {

template <typename T>
const T& body_at(const LedgerState& state, std::uint32_t id, const char* what) {
    auto it = state.contracts.find(id);
    if (it == state.contracts.end()) raise(Errc::unknown_contract, "no contract at id");
    const T* body = std::get_if<T>(&it->second.body);
    if (!body) raise(Errc::unknown_contract, what);
    return *body;
}

}  // namespace

const TumblerContract& tumbler_at(const LedgerState& state, std::uint32_t id) {
    return body_at<TumblerContract>(state, id, "not a tumbler contract");
}

const ConfContract& conf_at(const LedgerState& state, std::uint32_t id) {
    return body_at<ConfContract>(state, id, "not a confidential contract");
}

const VoteContract& vote_at(const LedgerState& state, std::uint32_t id) {
    return body_at<VoteContract>(state, id, "not a voting contract");
}

Address address_from_label(const std::string& label) {
    Digest d = Hasher(Domain::transcript).str("addr").str(label).finish();
    Address addr{};
    std::copy(d.begin(), d.begin() + addr.size(), addr.begin());
    return addr;
}

// ---------------------------------------------------------------------------
// Canonical serialization
// ---------------------------------------------------------------------------

namespace {

void put_state(Encoder& e, const AccumulatorState& st) { e.raw(st.root).u64(st.leaf_count); }
AccumulatorState get_state(Decoder& d) {
    AccumulatorState st;
    st.root = d.fixed<32>();
    st.leaf_count = d.u64();
    return st;
}

void put_proof(Encoder& e, const Proof& p) { e.raw(p.bytes).str(p.backend_id); }
Proof get_proof(Decoder& d) {
    Proof p;
    p.bytes = d.fixed<32>();
    p.backend_id = d.str();
    return p;
}

void put_ct(Encoder& e, const HomCiphertext& c) { e.raw(c.c1).raw(c.c2); }
HomCiphertext get_ct(Decoder& d) {
    HomCiphertext c;
    c.c1 = d.fixed<32>();
    c.c2 = d.fixed<32>();
    return c;
}

void put_payload(Encoder& e, const CallPayload& payload) {
    e.u8(static_cast<std::uint8_t>(payload.index()));
    std::visit(
        [&](const auto& call) {
            using T = std::decay_t<decltype(call)>;
            if constexpr (std::is_same_v<T, TransferCall>) {
            } else if constexpr (std::is_same_v<T, DepositCall>) {
                e.raw(call.cpk.bytes);
            } else if constexpr (std::is_same_v<T, WithdrawCall>) {
                put_state(e, call.st);
                e.raw(call.tag.bytes);
                put_proof(e, call.proof);
                e.raw(call.recipient);
            } else if constexpr (std::is_same_v<T, TransparentDepositCall>) {
                e.raw(call.cpk_prime).u64(call.amt);
            } else if constexpr (std::is_same_v<T, ConfidentialDepositCall>) {
                put_ct(e, call.c_transfer);
                e.raw(call.cpk.bytes).raw(call.ek_sender);
                put_proof(e, call.proof);
            } else if constexpr (std::is_same_v<T, UcWithdrawCall>) {
                put_state(e, call.st);
                e.raw(call.tag.bytes);
                put_proof(e, call.proof);
                put_ct(e, call.c);
                e.blob(call.m);
            } else if constexpr (std::is_same_v<T, ConfFundCall>) {
                e.raw(call.ek).u64(call.amt);
            } else if constexpr (std::is_same_v<T, RegisterCandidateCall>) {
                e.raw(call.ek);
            } else if constexpr (std::is_same_v<T, AdvanceStageCall>) {
            } else if constexpr (std::is_same_v<T, RegistrationCall>) {
                e.raw(call.cpk_prime).u64(call.vote_power);
            } else if constexpr (std::is_same_v<T, VoteCall>) {
                put_state(e, call.st);
                e.raw(call.tag.bytes);
                put_proof(e, call.proof);
                put_ct(e, call.c);
                e.raw(call.ek_candidate);
            } else if constexpr (std::is_same_v<T, RevealCall>) {
                e.raw(call.ek).u64(call.bal);
                put_proof(e, call.proof);
            } else if constexpr (std::is_same_v<T, ProbeCall>) {
                e.u32(call.bump).u64(call.payout).raw(call.payout_to).u8(call.fail ? 1 : 0);
            }
        },
        payload);
}

CallPayload get_payload(Decoder& d) {
    std::uint8_t idx = d.u8();
    switch (idx) {
        case 0: return TransferCall{};
        case 1: return DepositCall{CoinPublicKey{d.fixed<32>()}};
        case 2: {
            WithdrawCall c;
            c.st = get_state(d);
            c.tag = Tag{d.fixed<32>()};
            c.proof = get_proof(d);
            c.recipient = d.fixed<20>();
            return c;
        }
        case 3: {
            TransparentDepositCall c;
            c.cpk_prime = d.fixed<32>();
            c.amt = d.u64();
            return c;
        }
        case 4: {
            ConfidentialDepositCall c;
            c.c_transfer = get_ct(d);
            c.cpk = CoinPublicKey{d.fixed<32>()};
            c.ek_sender = d.fixed<32>();
            c.proof = get_proof(d);
            return c;
        }
        case 5: {
            UcWithdrawCall c;
            c.st = get_state(d);
            c.tag = Tag{d.fixed<32>()};
            c.proof = get_proof(d);
            c.c = get_ct(d);
            c.m = d.blob();
            return c;
        }
        case 6: {
            ConfFundCall c;
            c.ek = d.fixed<32>();
            c.amt = d.u64();
            return c;
        }
        case 7: return RegisterCandidateCall{d.fixed<32>()};
        case 8: return AdvanceStageCall{};
        case 9: {
            RegistrationCall c;
            c.cpk_prime = d.fixed<32>();
            c.vote_power = d.u64();
            return c;
        }
        case 10: {
            VoteCall c;
            c.st = get_state(d);
            c.tag = Tag{d.fixed<32>()};
            c.proof = get_proof(d);
            c.c = get_ct(d);
            c.ek_candidate = d.fixed<32>();
            return c;
        }
        case 11: {
            RevealCall c;
            c.ek = d.fixed<32>();
            c.bal = d.u64();
            c.proof = get_proof(d);
            return c;
        }
        case 12: {
            ProbeCall c;
            c.bump = d.u32();
            c.payout = d.u64();
            c.payout_to = d.fixed<20>();
            c.fail = d.u8() != 0;
            return c;
        }
        default: raise(Errc::bad_payload, "unknown payload tag");
    }
}

}  // namespace

Bytes encode_tx(const Transaction& tx) {
    Encoder e;
    e.raw(tx.sender);
    if (const auto* to = std::get_if<Address>(&tx.target)) {
        e.u8(0).raw(*to);
    } else {
        e.u8(1).u32(std::get<std::uint32_t>(tx.target));
    }
    e.u64(tx.value);
    put_payload(e, tx.payload);
    return e.take();
}

Transaction decode_tx(ByteView data) {
    Decoder d(data);
    Transaction tx;
    tx.sender = d.fixed<20>();
    if (d.u8() == 0) {
        tx.target = d.fixed<20>();
    } else {
        tx.target = d.u32();
    }
    tx.value = d.u64();
    tx.payload = get_payload(d);
    if (!d.done()) raise(Errc::bad_payload, "trailing bytes after transaction");
    return tx;
}

Bytes encode_event(const Event& ev) {
    return Encoder().u32(ev.contract_id).str(ev.label).blob(ev.payload).take();
}

Event decode_event(ByteView data) {
    Decoder d(data);
    Event ev;
    ev.contract_id = d.u32();
    ev.label = d.str();
    ev.payload = d.blob();
    if (!d.done()) raise(Errc::bad_payload, "trailing bytes after event");
    return ev;
}

}  // namespace dtl

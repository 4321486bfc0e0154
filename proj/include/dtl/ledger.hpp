#pragma once

#include "dtl/contracts.hpp"

namespace dtl {

struct Event {
    std::uint32_t contract_id = 0;
    std::string label;
    Bytes payload;

    auto operator<=>(const Event&) const = default;
};

struct Transaction {
    Address sender{};
    std::variant<Address, std::uint32_t> target;  // EOA transfer or contract call
    std::uint64_t value = 0;
    CallPayload payload = TransferCall{};
};

struct TxResult {
    bool ok = true;
    Errc code = Errc::none;
    std::string detail;
};

// Ledger-side holder of per-relation NIZK keys, installed at deploy time.
// For the reference backend this registry is also the prover oracle.
struct SetupRegistry {
    std::map<RelationId, NizkKeys> keys;

    void put(const NizkKeys& k) { keys[k.rel] = k; }
    bool has(RelationId rel) const { return keys.count(rel) > 0; }
    const NizkKeys& get(RelationId rel) const;
};

struct ContractRecord {
    std::uint64_t pool = 0;  // native tokens held by the contract
    ContractBody body;
};

// The whole chain state as a value. apply_tx is functional, which is what
// makes atomicity and replay trivial to reason about. The ledger trusts a
// single honest sequencer; there are no blocks and no fees.
struct LedgerState {
    std::map<Address, std::uint64_t> balances;
    std::map<std::uint32_t, ContractRecord> contracts;
    std::vector<Event> events;
    std::uint64_t tx_count = 0;
    std::uint32_t next_contract_id = 1;
    SetupRegistry registry;
};

LedgerState genesis(std::span<const std::pair<Address, std::uint64_t>> accounts);

// Atomic application: on any rejection the returned state differs from the
// input only in tx_count, and the escrowed value is back with the sender.
std::pair<LedgerState, TxResult> apply_tx(const LedgerState& state, const Transaction& tx);

std::vector<Event> read_events(const LedgerState& state,
                               std::optional<std::uint32_t> contract = {},
                               std::optional<std::string> label = {});

std::uint64_t total_native(const LedgerState& state);

Digest ledger_digest(const LedgerState& state);
Digest event_log_digest(const LedgerState& state);

// Deployment (setup-time plumbing; mutates in place, returns the id).
std::uint32_t deploy_fixed_tumbler(LedgerState& state, const SecParams& sec, ByteView seed,
                                   std::uint64_t amt_fixed);
std::uint32_t deploy_conf(LedgerState& state);
std::uint32_t deploy_arb_tumbler(LedgerState& state, const SecParams& sec, ByteView seed,
                                 std::uint32_t conf_id);
std::uint32_t deploy_vote(LedgerState& state, const SecParams& sec, ByteView seed);
std::uint32_t deploy_probe(LedgerState& state);

const TumblerContract& tumbler_at(const LedgerState& state, std::uint32_t id);
const ConfContract& conf_at(const LedgerState& state, std::uint32_t id);
const VoteContract& vote_at(const LedgerState& state, std::uint32_t id);

// Canonical binary serialization (length-prefixed, little-endian), used by
// scenario replay logs.
Bytes encode_tx(const Transaction& tx);
Transaction decode_tx(ByteView data);
Bytes encode_event(const Event& ev);
Event decode_event(ByteView data);

Address address_from_label(const std::string& label);

}  // namespace dtl

#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dtl/scheme.hpp"

namespace dtl {

using Address = std::array<std::uint8_t, 20>;

// ---------------------------------------------------------------------------
// Call payloads. These are the contract call interface and the unit of
// canonical transaction serialization.
// ---------------------------------------------------------------------------

struct TransferCall {};

// Fixed tumbler: deposit a coin public key together with amt_fixed tokens.
struct DepositCall {
    CoinPublicKey cpk;
};

struct WithdrawCall {
    AccumulatorState st;
    Tag tag;
    Proof proof;
    Address recipient{};
};

// Arbitrary tumbler: transparent deposit of amt tokens; the contract
// commits the amount itself, so the stored leaf is Commit(amt, cpk').
struct TransparentDepositCall {
    Digest cpk_prime{};
    std::uint64_t amt = 0;
};

struct ConfidentialDepositCall {
    HomCiphertext c_transfer;
    CoinPublicKey cpk;
    GroupElement ek_sender{};
    Proof proof;
};

struct UcWithdrawCall {
    AccumulatorState st;
    Tag tag;
    Proof proof;
    HomCiphertext c;
    Bytes m;  // canonical ek_recv followed by optional aux bytes
};

// Public-amount funding of an encrypted account; escrows tx value.
struct ConfFundCall {
    GroupElement ek{};
    std::uint64_t amt = 0;
};

struct RegisterCandidateCall {
    GroupElement ek{};
};

struct AdvanceStageCall {};

struct RegistrationCall {
    Digest cpk_prime{};
    std::uint64_t vote_power = 0;
};

struct VoteCall {
    AccumulatorState st;
    Tag tag;
    Proof proof;
    HomCiphertext c;
    GroupElement ek_candidate{};
};

struct RevealCall {
    GroupElement ek{};
    std::uint64_t bal = 0;
    Proof proof;
};

// Fault injection for atomicity property tests: mutates its counter, may
// pay out of the pool and emit events, then optionally fails.
struct ProbeCall {
    std::uint32_t bump = 0;
    std::uint64_t payout = 0;
    Address payout_to{};
    bool fail = false;
};

using CallPayload =
    std::variant<TransferCall, DepositCall, WithdrawCall, TransparentDepositCall,
                 ConfidentialDepositCall, UcWithdrawCall, ConfFundCall,
                 RegisterCandidateCall, AdvanceStageCall, RegistrationCall, VoteCall,
                 RevealCall, ProbeCall>;

// ---------------------------------------------------------------------------
// Contract state
// ---------------------------------------------------------------------------

// Core tumbler bookkeeping shared by the payment and voting contracts:
// the full deposit history, an incremental tree mirroring it, the ring of
// the k most recent roots, and the spent-tag set.
struct TumblerState {
    DtlParams params;
    std::vector<CoinPublicKey> acc_history;
    IncrementalTree tree;
    std::deque<AccumulatorState> acc_list_wdr;
    std::set<Tag> tag_list;

    explicit TumblerState(DtlParams p)
        : params(std::move(p)), tree(params.sec.tree_depth) {}

    // Appends a leaf and pushes the new root, evicting beyond k.
    void append_leaf(const CoinPublicKey& cpk);
    bool window_contains(const AccumulatorState& st) const;
    bool tag_seen(const Tag& tag) const { return tag_list.count(tag) > 0; }

    // Window membership, tag freshness and proof verification; appends the
    // tag on success, throws StaleRoot / DoubleRedeem / InvalidProof.
    void check_and_spend(const AccumulatorState& st, const Tag& tag, const Proof& proof,
                         ByteView m, const std::optional<HomCiphertext>& c);
};

// Encrypted-balance accounts keyed by encryption key (Zether-style).
struct ConfState {
    std::map<GroupElement, HomCiphertext> accounts;

    // Creates the account holding c when absent, else adds homomorphically.
    void fund(const GroupElement& ek, const HomCiphertext& c);
    // Subtracts homomorphically; the account must exist.
    void burn(const GroupElement& ek, const HomCiphertext& c);
    const HomCiphertext& read(const GroupElement& ek) const;
    bool has(const GroupElement& ek) const { return accounts.count(ek) > 0; }
};

enum class VoteStage : std::uint8_t { setup = 0, registration = 1, voting = 2, reveal = 3 };

const char* vote_stage_name(VoteStage stage);

struct TumblerContract {
    TumblerState tum;
    std::uint64_t amt_fixed = 0;              // fixed mode denomination
    std::optional<std::uint32_t> conf_id;     // arbitrary mode: the C_Conf it drives
    std::optional<NizkKeys> equality_keys;    // arbitrary mode: vrfyK for R_equality
};

struct ConfContract {
    ConfState state;
};

struct VoteContract {
    VoteStage stage = VoteStage::setup;
    std::vector<GroupElement> candidates;
    TumblerState tum;
    ConfState conf;
    std::map<GroupElement, std::uint64_t> revealed;
    NizkKeys reveal_keys;
};

struct ProbeContract {
    std::uint64_t counter = 0;
};

using ContractBody = std::variant<TumblerContract, ConfContract, VoteContract, ProbeContract>;

// Ledger services a handler may use while executing a call.
class HostCtx {
public:
    virtual ~HostCtx() = default;
    virtual void emit(const std::string& label, Bytes payload) = 0;
    virtual void pay_from_pool(const Address& to, std::uint64_t amount) = 0;
    virtual std::uint64_t pool() const = 0;
    virtual ConfState& conf_contract(std::uint32_t id) = 0;
};

// Dispatches one call against a contract body. Throws Error on rejection;
// the ledger guarantees atomicity around this.
void handle_call(ContractBody& body, HostCtx& host, const Address& sender,
                 std::uint64_t value, const CallPayload& payload);

Digest contract_digest(const ContractBody& body);

}  // namespace dtl

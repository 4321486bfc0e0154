#pragma once

#include <variant>

#include "dtl/commit.hpp"
#include "dtl/elgamal.hpp"
#include "dtl/merkle.hpp"
#include "dtl/prf.hpp"

namespace dtl {

enum class RelationId : std::uint8_t {
    fixed_redeem = 1,  // path membership + tag consistency
    arb_redeem = 2,    // adds commitment opening, ciphertext equality, P(data)
    equality = 3,      // confidential deposit spends amt <= bal
    reveal = 4,        // revealed tally equals decryption
};

const char* relation_name(RelationId rel);

struct FixedRedeemStmt {
    AccumulatorState st;
    Tag tag;
    Bytes m;
};

// m must begin with the canonical encoding of the recipient ek.
struct ArbRedeemStmt {
    AccumulatorState st;
    Tag tag;
    Bytes m;
    HomCiphertext c;
};

struct EqualityStmt {
    HomCiphertext c_bal;
    HomCiphertext c_transfer;
    CoinPublicKey cpk;
    GroupElement ek_sender{};
};

struct RevealStmt {
    GroupElement ek{};
    HomCiphertext c;
    std::uint64_t bal = 0;
};

using Statement = std::variant<FixedRedeemStmt, ArbRedeemStmt, EqualityStmt, RevealStmt>;

struct FixedRedeemWit {
    std::uint64_t index = 0;
    CoinSecret csk;
    MerklePath path;
};

struct ArbRedeemWit {
    Bytes k;
    Bytes r;
    std::uint64_t data = 0;
    MerklePath path;
    Scalar r_enc{};
    std::uint64_t index = 0;
};

struct EqualityWit {
    std::uint64_t bal = 0;
    Scalar dk{};
    // csk = (k, r, amt)
    Bytes k;
    Bytes r;
    std::uint64_t amt = 0;
};

struct RevealWit {
    Scalar dk{};
};

using Witness = std::variant<FixedRedeemWit, ArbRedeemWit, EqualityWit, RevealWit>;

RelationId statement_relation(const Statement& stmt);

// Injective canonical encoding per variant; this is what proofs bind.
Bytes encode_statement(const Statement& stmt);

// Extracts and validates the leading encryption key of a redeem message.
GroupElement parse_leading_ek(ByteView m);

// Evaluates the relation in the clear. Returns 1 iff every clause holds;
// throws RelationMismatch when the variants do not match rel.
bool relation_eval(const SecParams& sec, RelationId rel, const Statement& stmt,
                   const Witness& wit);

}  // namespace dtl

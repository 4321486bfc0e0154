#include "dtl/relations.hpp"

#include "dtl/encode.hpp"
#include "dtl/errors.hpp"

namespace dtl {

const char* relation_name(RelationId rel) {
    switch (rel) {
        case RelationId::fixed_redeem: return "fixed-redeem";
        case RelationId::arb_redeem: return "arb-redeem";
        case RelationId::equality: return "equality";
        case RelationId::reveal: return "reveal";
    }
    return "unknown";
}

RelationId statement_relation(const Statement& stmt) {
    return std::visit(
        [](const auto& s) -> RelationId {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FixedRedeemStmt>) return RelationId::fixed_redeem;
            else if constexpr (std::is_same_v<T, ArbRedeemStmt>) return RelationId::arb_redeem;
            else if constexpr (std::is_same_v<T, EqualityStmt>) return RelationId::equality;
            else return RelationId::reveal;
        },
        stmt);
}

namespace {

void put_state(Encoder& enc, const AccumulatorState& st) {
    enc.raw(st.root).u64(st.leaf_count);
}

void put_ct(Encoder& enc, const HomCiphertext& c) {
    enc.raw(c.c1).raw(c.c2);
}

}  // namespace

Bytes encode_statement(const Statement& stmt) {
    Encoder enc;
    enc.u8(static_cast<std::uint8_t>(statement_relation(stmt)));
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FixedRedeemStmt>) {
                put_state(enc, s.st);
                enc.raw(s.tag.bytes).blob(s.m);
            } else if constexpr (std::is_same_v<T, ArbRedeemStmt>) {
                put_state(enc, s.st);
                enc.raw(s.tag.bytes).blob(s.m);
                put_ct(enc, s.c);
            } else if constexpr (std::is_same_v<T, EqualityStmt>) {
                put_ct(enc, s.c_bal);
                put_ct(enc, s.c_transfer);
                enc.raw(s.cpk.bytes).raw(s.ek_sender);
            } else {
                enc.raw(s.ek);
                put_ct(enc, s.c);
                enc.u64(s.bal);
            }
        },
        stmt);
    return enc.take();
}

GroupElement parse_leading_ek(ByteView m) {
    if (m.size() < 32) raise(Errc::malformed_message, "message too short for leading ek");
    GroupElement ek{};
    std::copy(m.begin(), m.begin() + 32, ek.begin());
    if (!ge_is_valid(ek) || ge_is_identity(ek))
        raise(Errc::malformed_message, "leading ek is not a group element");
    return ek;
}

namespace {

bool eval_fixed(const SecParams& sec, const FixedRedeemStmt& s, const FixedRedeemWit& w) {
    if (w.csk.k.size() != sec.lambda_bytes() || w.csk.r.size() != sec.lambda_bytes())
        return false;
    CoinPublicKey cpk = tag_kgen(w.csk, sec);
    if (!mt_verify(w.index, cpk, s.st.root, w.path)) return false;
    return s.tag == tag_eval(w.csk, sec);
}

bool eval_arb(const SecParams& sec, const ArbRedeemStmt& s, const ArbRedeemWit& w) {
    if (w.k.size() != sec.lambda_bytes() || w.r.size() != sec.lambda_bytes()) return false;
    if (w.data >= sec.plaintext_bound()) return false;  // predicate P
    CoinSecret inner{w.k, w.r, {}};
    CoinPublicKey cpk_prime = tag_kgen(inner, sec);
    CoinPublicKey cpk = commit(w.data, cpk_prime.bytes, sec);
    if (!mt_verify(w.index, cpk, s.st.root, w.path)) return false;
    if (s.tag != tag_eval(inner, sec)) return false;
    GroupElement ek;
    try {
        ek = parse_leading_ek(s.m);
    } catch (const Error&) {
        return false;
    }
    return s.c == hom_enc(ek, w.data, w.r_enc, sec);
}

bool eval_equality(const SecParams& sec, const EqualityStmt& s, const EqualityWit& w) {
    if (w.k.size() != sec.lambda_bytes() || w.r.size() != sec.lambda_bytes()) return false;
    if (scalar_is_zero(w.dk)) return false;
    if (s.ek_sender != hom_derive(w.dk)) return false;
    if (!hom_decrypts_to(w.dk, s.c_bal, w.bal)) return false;
    if (!hom_decrypts_to(w.dk, s.c_transfer, w.amt)) return false;
    if (w.amt > w.bal) return false;
    if (w.amt >= sec.plaintext_bound()) return false;
    CoinSecret inner{w.k, w.r, {}};
    return s.cpk == commit(w.amt, tag_kgen(inner, sec).bytes, sec);
}

bool eval_reveal(const SecParams&, const RevealStmt& s, const RevealWit& w) {
    if (scalar_is_zero(w.dk)) return false;
    if (s.ek != hom_derive(w.dk)) return false;
    return hom_decrypts_to(w.dk, s.c, s.bal);
}

}  // namespace

bool relation_eval(const SecParams& sec, RelationId rel, const Statement& stmt,
                   const Witness& wit) {
    if (statement_relation(stmt) != rel)
        raise(Errc::relation_mismatch, "statement variant does not match relation");
    switch (rel) {
        case RelationId::fixed_redeem: {
            auto* s = std::get_if<FixedRedeemStmt>(&stmt);
            auto* w = std::get_if<FixedRedeemWit>(&wit);
            if (!w) raise(Errc::relation_mismatch, "witness variant does not match relation");
            return eval_fixed(sec, *s, *w);
        }
        case RelationId::arb_redeem: {
            auto* s = std::get_if<ArbRedeemStmt>(&stmt);
            auto* w = std::get_if<ArbRedeemWit>(&wit);
            if (!w) raise(Errc::relation_mismatch, "witness variant does not match relation");
            return eval_arb(sec, *s, *w);
        }
        case RelationId::equality: {
            auto* s = std::get_if<EqualityStmt>(&stmt);
            auto* w = std::get_if<EqualityWit>(&wit);
            if (!w) raise(Errc::relation_mismatch, "witness variant does not match relation");
            return eval_equality(sec, *s, *w);
        }
        case RelationId::reveal: {
            auto* s = std::get_if<RevealStmt>(&stmt);
            auto* w = std::get_if<RevealWit>(&wit);
            if (!w) raise(Errc::relation_mismatch, "witness variant does not match relation");
            return eval_reveal(sec, *s, *w);
        }
    }
    raise(Errc::relation_mismatch, "unknown relation id");
}

}  // namespace dtl

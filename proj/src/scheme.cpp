#include "dtl/scheme.hpp"

#include <algorithm>

#include "dtl/errors.hpp"

namespace dtl {

DtlParams dtl_setup(Mode mode, const SecParams& sec, ByteView seed,
                    std::optional<std::uint64_t> fixed_data) {
    sec.validate();
    DtlParams params;
    params.mode = mode;
    params.sec = sec;
    params.keys = nizk_setup(
        mode == Mode::fixed ? RelationId::fixed_redeem : RelationId::arb_redeem, seed);
    if (mode == Mode::fixed) {
        params.fixed_data = fixed_data.value_or(0);
    } else if (fixed_data.has_value()) {
        raise(Errc::mode_mismatch, "fixed_data is a fixed-mode parameter");
    }
    return params;
}

std::pair<CoinPublicKey, CoinSecret> dtl_create(const DtlParams& params, Rng& rng,
                                                std::optional<std::uint64_t> data) {
    CoinSecret csk;
    csk.k = rng.bytes(params.sec.lambda_bytes());
    csk.r = rng.bytes(params.sec.lambda_bytes());
    if (params.mode == Mode::fixed) {
        if (data.has_value()) raise(Errc::mode_mismatch, "fixed mode takes no data");
        return {tag_kgen(csk, params.sec), csk};
    }
    if (!data.has_value()) raise(Errc::mode_mismatch, "arbitrary mode requires data");
    if (*data >= params.sec.plaintext_bound())
        raise(Errc::range_violation, "coin data out of range");
    csk.data = *data;
    CoinPublicKey cpk = commit(*data, tag_kgen(csk, params.sec).bytes, params.sec);
    return {cpk, csk};
}

CoinPublicKey coin_public_key(const DtlParams& params, const CoinSecret& csk) {
    CoinPublicKey inner = tag_kgen(csk, params.sec);
    if (params.mode == Mode::fixed) return inner;
    if (!csk.data.has_value()) raise(Errc::mode_mismatch, "arbitrary-mode secret lacks data");
    return commit(*csk.data, inner.bytes, params.sec);
}

AccumulatorState dtl_accumulate(const DtlParams& params,
                                std::span<const CoinPublicKey> cpks) {
    return mt_build(cpks, params.sec.tree_depth);
}

std::optional<RedeemResult> dtl_redeem(const DtlParams& params,
                                       std::span<const CoinPublicKey> cpks,
                                       const CoinSecret& csk, ByteView m, Rng& rng) {
    const CoinPublicKey cpk = coin_public_key(params, csk);
    auto it = std::find(cpks.begin(), cpks.end(), cpk);
    if (it == cpks.end()) return std::nullopt;
    const std::uint64_t index = static_cast<std::uint64_t>(it - cpks.begin());

    // st is recomputed from the list, never trusted from the caller.
    auto [st, path] = mt_build_with_path(cpks, params.sec.tree_depth, index);
    const Tag tag = tag_eval(csk, params.sec);

    RedeemResult result;
    result.tag = tag;
    if (params.mode == Mode::fixed) {
        FixedRedeemStmt stmt{st, tag, to_bytes(m)};
        FixedRedeemWit wit{index, csk, std::move(path)};
        result.proof = nizk_prove(params.keys, params.sec, RelationId::fixed_redeem,
                                  Statement{std::move(stmt)}, Witness{std::move(wit)});
        return result;
    }

    const GroupElement ek = parse_leading_ek(m);  // MalformedMessage on bad m
    const Scalar r_enc = scalar_random(rng);
    const HomCiphertext c = hom_enc(ek, *csk.data, r_enc, params.sec);
    ArbRedeemStmt stmt{st, tag, to_bytes(m), c};
    ArbRedeemWit wit{csk.k, csk.r, *csk.data, std::move(path), r_enc, index};
    result.proof = nizk_prove(params.keys, params.sec, RelationId::arb_redeem,
                              Statement{std::move(stmt)}, Witness{std::move(wit)});
    result.ciphertext = c;
    return result;
}

bool dtl_verify(const DtlParams& params, const AccumulatorState& st, const Tag& tag,
                const Proof& proof, ByteView m, const std::optional<HomCiphertext>& c) {
    if (params.mode == Mode::fixed) {
        if (c.has_value()) return false;
        FixedRedeemStmt stmt{st, tag, to_bytes(m)};
        return nizk_verify(params.keys, RelationId::fixed_redeem, Statement{std::move(stmt)},
                           proof);
    }
    if (!c.has_value()) return false;
    try {
        parse_leading_ek(m);
    } catch (const Error&) {
        return false;
    }
    ArbRedeemStmt stmt{st, tag, to_bytes(m), *c};
    return nizk_verify(params.keys, RelationId::arb_redeem, Statement{std::move(stmt)}, proof);
}

}  // namespace dtl

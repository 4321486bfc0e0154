#include "dtl/nizk.hpp"

#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

namespace {

Digest mac_over_statement(const Digest& key, RelationId rel, const Statement& stmt) {
    Bytes encoded = encode_statement(stmt);
    return Hasher(Domain::nizk_mac)
        .u8(1)  // "prove"
        .blob(key)
        .u8(static_cast<std::uint8_t>(rel))
        .blob(encoded)
        .finish();
}

}  // namespace

NizkKeys nizk_setup(RelationId rel, ByteView seed) {
    NizkKeys keys;
    keys.rel = rel;
    keys.prvK = Hasher(Domain::nizk_mac)
                    .u8(0)  // "setup"
                    .u8(static_cast<std::uint8_t>(rel))
                    .blob(seed)
                    .finish();
    keys.vrfyK = keys.prvK;
    return keys;
}

Proof nizk_prove(const NizkKeys& keys, const SecParams& sec, RelationId rel,
                 const Statement& stmt, const Witness& wit) {
    if (keys.rel != rel) raise(Errc::relation_mismatch, "keys issued for a different relation");
    if (!relation_eval(sec, rel, stmt, wit))
        raise(Errc::unsatisfied_relation, "witness does not satisfy the relation");
    Proof proof;
    proof.bytes = mac_over_statement(keys.prvK, rel, stmt);
    return proof;
}

bool nizk_verify(const NizkKeys& keys, RelationId rel, const Statement& stmt,
                 const Proof& proof) {
    if (keys.rel != rel) return false;
    if (proof.backend_id != kMacBackendId) return false;
    if (statement_relation(stmt) != rel) return false;
    return proof.bytes == mac_over_statement(keys.vrfyK, rel, stmt);
}

}  // namespace dtl

#pragma once

#include <string>

#include "dtl/relations.hpp"

namespace dtl {

// Designated-setup reference backend. The setup key authenticates a
// statement only after the relation has been checked in the clear, so
// soundness holds against any party without prvK, and proofs are a pure
// function of the statement (the zero-knowledge analog). A real SNARK
// backend can replace this behind the same interface.
inline constexpr const char* kMacBackendId = "mac-nizk/1";

struct NizkKeys {
    RelationId rel = RelationId::fixed_redeem;
    Digest prvK{};
    Digest vrfyK{};  // same bytes; the verifier role holds it via the registry

    auto operator<=>(const NizkKeys&) const = default;
};

struct Proof {
    Digest bytes{};
    std::string backend_id = kMacBackendId;

    auto operator<=>(const Proof&) const = default;
};

// Deterministic per (relation, seed); distinct relations get independent keys.
NizkKeys nizk_setup(RelationId rel, ByteView seed);

// Refuses (UnsatisfiedRelation) unless relation_eval(rel, stmt, wit) = 1.
Proof nizk_prove(const NizkKeys& keys, const SecParams& sec, RelationId rel,
                 const Statement& stmt, const Witness& wit);

bool nizk_verify(const NizkKeys& keys, RelationId rel, const Statement& stmt,
                 const Proof& proof);

}  // namespace dtl

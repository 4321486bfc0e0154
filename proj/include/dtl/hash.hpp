#pragma once

#include <string>

#include "dtl/bytes.hpp"

namespace dtl {

// All hashing in the project goes through one 256-bit hash with a one-byte
// domain prefix, so test vectors are stable across modules.
enum class Domain : std::uint8_t {
    prf_kgen = 0x01,   // cpk derivation, F(k, r)
    prf_tag = 0x02,    // tag derivation, F(k, 0^lambda)
    commit = 0x03,     // hash commitment
    mt_leaf = 0x04,    // merkle leaf hashing
    mt_node = 0x05,    // merkle inner node
    mt_empty = 0x06,   // default leaf for unfilled slots
    nizk_mac = 0x07,   // reference proof backend
    transcript = 0x08, // transcripts, digests of logs, key/seed expansion
};

Digest hash(Domain domain, ByteView payload);

// Allocation-free two-part hash; digest of domain || a || b. Hot path for
// merkle node combination.
Digest hash2(Domain domain, ByteView a, ByteView b);

// Incremental variant for call sites that assemble the payload in steps.
class Hasher {
public:
    explicit Hasher(Domain domain);
    Hasher& raw(ByteView v);
    Hasher& u8(std::uint8_t v);
    Hasher& u32(std::uint32_t v);
    Hasher& u64(std::uint64_t v);
    Hasher& blob(ByteView v);
    Hasher& str(const std::string& s);
    Digest finish() const;

private:
    Bytes buf_;
};

}  // namespace dtl

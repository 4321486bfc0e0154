#include "dtl/hash.hpp"

#include <openssl/sha.h>

#include "dtl/encode.hpp"

namespace dtl {

namespace {

// The low-level SHA256 interface skips OpenSSL 3's per-call algorithm
// fetch, which is 4x on short inputs; this file is the only hash call
// site, so the deprecation surface stays contained.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-declarations"
void sha256_parts(std::initializer_list<ByteView> parts, Digest& out) {
    SHA256_CTX ctx;
    SHA256_Init(&ctx);
    for (ByteView part : parts) SHA256_Update(&ctx, part.data(), part.size());
    SHA256_Final(out.data(), &ctx);
}
#pragma GCC diagnostic pop

ByteView domain_view(const std::uint8_t& byte) { return ByteView(&byte, 1); }

}  // namespace

Digest hash(Domain domain, ByteView payload) {
    Digest out{};
    std::uint8_t d = static_cast<std::uint8_t>(domain);
    sha256_parts({domain_view(d), payload}, out);
    return out;
}

Digest hash2(Domain domain, ByteView a, ByteView b) {
    Digest out{};
    std::uint8_t d = static_cast<std::uint8_t>(domain);
    sha256_parts({domain_view(d), a, b}, out);
    return out;
}

Hasher::Hasher(Domain domain) { buf_.push_back(static_cast<std::uint8_t>(domain)); }

Hasher& Hasher::raw(ByteView v) {
    buf_.insert(buf_.end(), v.begin(), v.end());
    return *this;
}

Hasher& Hasher::u8(std::uint8_t v) {
    buf_.push_back(v);
    return *this;
}

Hasher& Hasher::u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    return *this;
}

Hasher& Hasher::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    return *this;
}

Hasher& Hasher::blob(ByteView v) {
    u32(static_cast<std::uint32_t>(v.size()));
    return raw(v);
}

Hasher& Hasher::str(const std::string& s) {
    return blob(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

Digest Hasher::finish() const {
    Digest out{};
    sha256_parts({ByteView(buf_)}, out);
    return out;
}

std::string to_hex(ByteView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    raise(Errc::bad_payload, "invalid hex digit");
}

Bytes from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) raise(Errc::bad_payload, "odd hex length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>((hex_nibble(hex[i]) << 4) | hex_nibble(hex[i + 1])));
    }
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::none: return "none";
        case Errc::invalid_key: return "InvalidKey";
        case Errc::range_violation: return "RangeViolation";
        case Errc::tree_full: return "TreeFull";
        case Errc::index_error: return "IndexError";
        case Errc::decode_failure: return "DecodeFailure";
        case Errc::relation_mismatch: return "RelationMismatch";
        case Errc::unsatisfied_relation: return "UnsatisfiedRelation";
        case Errc::mode_mismatch: return "ModeMismatch";
        case Errc::malformed_message: return "MalformedMessage";
        case Errc::duplicate_account: return "DuplicateAccount";
        case Errc::unknown_account: return "UnknownAccount";
        case Errc::unknown_contract: return "UnknownContract";
        case Errc::insufficient_funds: return "InsufficientFunds";
        case Errc::amount_mismatch: return "AmountMismatch";
        case Errc::stale_root: return "StaleRoot";
        case Errc::double_redeem: return "DoubleRedeem";
        case Errc::invalid_proof: return "InvalidProof";
        case Errc::wrong_stage: return "WrongStage";
        case Errc::unknown_candidate: return "UnknownCandidate";
        case Errc::bad_payload: return "BadPayload";
        case Errc::fault_injected: return "FaultInjected";
    }
    return "unknown";
}

}  // namespace dtl

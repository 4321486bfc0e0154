#include "dtl/group.hpp"

#include <sodium.h>

#include <mutex>

#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

namespace {

void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) raise(Errc::decode_failure, "libsodium init failed");
    });
}

}  // namespace

GroupElement ge_identity() { return GroupElement{}; }

bool ge_is_identity(const GroupElement& p) { return p == GroupElement{}; }

bool ge_is_valid(const GroupElement& p) {
    ensure_sodium();
    return crypto_core_ristretto255_is_valid_point(p.data()) == 1;
}

GroupElement ge_add(const GroupElement& a, const GroupElement& b) {
    ensure_sodium();
    if (ge_is_identity(a)) return b;
    if (ge_is_identity(b)) return a;
    GroupElement out{};
    if (crypto_core_ristretto255_add(out.data(), a.data(), b.data()) != 0)
        raise(Errc::decode_failure, "group add on invalid encoding");
    return out;
}

GroupElement ge_sub(const GroupElement& a, const GroupElement& b) {
    ensure_sodium();
    if (ge_is_identity(b)) return a;
    GroupElement out{};
    if (crypto_core_ristretto255_sub(out.data(), a.data(), b.data()) != 0)
        raise(Errc::decode_failure, "group sub on invalid encoding");
    return out;
}

GroupElement ge_mul(const Scalar& n, const GroupElement& p) {
    ensure_sodium();
    if (scalar_is_zero(n) || ge_is_identity(p)) return ge_identity();
    GroupElement out{};
    // libsodium signals the identity result through the return code.
    if (crypto_scalarmult_ristretto255(out.data(), n.data(), p.data()) != 0)
        return ge_identity();
    return out;
}

GroupElement ge_base_mul(const Scalar& n) {
    ensure_sodium();
    if (scalar_is_zero(n)) return ge_identity();
    GroupElement out{};
    if (crypto_scalarmult_ristretto255_base(out.data(), n.data()) != 0)
        return ge_identity();
    return out;
}

GroupElement ge_base_mul_u64(std::uint64_t n) { return ge_base_mul(scalar_from_u64(n)); }

Scalar scalar_zero() { return Scalar{}; }

bool scalar_is_zero(const Scalar& s) { return s == Scalar{}; }

Scalar scalar_from_u64(std::uint64_t v) {
    Scalar s{};
    for (int i = 0; i < 8; ++i) s[i] = static_cast<std::uint8_t>(v >> (8 * i));
    return s;
}

Scalar scalar_random(Rng& rng) {
    ensure_sodium();
    Scalar s{};
    do {
        std::array<std::uint8_t, 64> wide{};
        rng.fill(wide);
        crypto_core_ristretto255_scalar_reduce(s.data(), wide.data());
    } while (scalar_is_zero(s));
    return s;
}

Scalar scalar_from_seed(ByteView seed) {
    ensure_sodium();
    std::array<std::uint8_t, 64> wide{};
    Digest lo = Hasher(Domain::transcript).blob(seed).u8(0).finish();
    Digest hi = Hasher(Domain::transcript).blob(seed).u8(1).finish();
    std::copy(lo.begin(), lo.end(), wide.begin());
    std::copy(hi.begin(), hi.end(), wide.begin() + 32);
    Scalar s{};
    crypto_core_ristretto255_scalar_reduce(s.data(), wide.data());
    if (scalar_is_zero(s)) s[0] = 1;  // unreachable in practice
    return s;
}

}  // namespace dtl

#include "dtl/elgamal.hpp"

#include <cstring>
#include <map>
#include <mutex>
#include <unordered_map>

#include "dtl/errors.hpp"

namespace dtl {

namespace {

struct GeHash {
    std::size_t operator()(const GroupElement& p) const {
        std::size_t h;
        std::memcpy(&h, p.data(), sizeof(h));
        return h;
    }
};

// One lookup table per baby-step width, shared across decryptions.
struct BsgsTable {
    unsigned baby_bits = 0;
    std::unordered_map<GroupElement, std::uint64_t, GeHash> baby;
    GroupElement giant_step{};  // -(G * 2^baby_bits)
};

// Caps table memory at 2^14 entries; larger plaintexts pay in giant steps.
unsigned baby_bits_for(unsigned range_bits) { return range_bits < 14 ? range_bits : 14; }

const BsgsTable& bsgs_table(unsigned range_bits) {
    static std::mutex mu;
    static std::map<unsigned, BsgsTable> cache;
    unsigned bits = baby_bits_for(range_bits);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;

    BsgsTable table;
    table.baby_bits = bits;
    const GroupElement g = ge_base_mul_u64(1);
    GroupElement cur = ge_identity();
    table.baby.reserve(1ull << bits);
    for (std::uint64_t j = 0; j < (1ull << bits); ++j) {
        table.baby.emplace(cur, j);
        cur = ge_add(cur, g);
    }
    // cur is now G * 2^bits
    table.giant_step = ge_sub(ge_identity(), cur);
    return cache.emplace(bits, std::move(table)).first->second;
}

}  // namespace

GroupElement hom_derive(const Scalar& dk) {
    if (scalar_is_zero(dk)) raise(Errc::invalid_key, "zero decryption key");
    return ge_base_mul(dk);
}

HomKeypair hom_kgen(ByteView seed) {
    HomKeypair kp;
    kp.dk = scalar_from_seed(seed);
    kp.ek = hom_derive(kp.dk);
    return kp;
}

HomKeypair hom_kgen(Rng& rng) {
    HomKeypair kp;
    kp.dk = scalar_random(rng);
    kp.ek = hom_derive(kp.dk);
    return kp;
}

HomCiphertext hom_enc(const GroupElement& ek, std::uint64_t m, const Scalar& r_enc,
                      const SecParams& sec) {
    if (m >= sec.plaintext_bound()) raise(Errc::range_violation, "plaintext out of range");
    if (!ge_is_valid(ek) || ge_is_identity(ek))
        raise(Errc::invalid_key, "invalid encryption key");
    HomCiphertext c;
    c.c1 = ge_base_mul(r_enc);
    c.c2 = ge_add(ge_base_mul_u64(m), ge_mul(r_enc, ek));
    return c;
}

std::uint64_t hom_dec(const Scalar& dk, const HomCiphertext& c, const SecParams& sec) {
    const GroupElement target = ge_sub(c.c2, ge_mul(dk, c.c1));
    const BsgsTable& table = bsgs_table(sec.plaintext_range_bits);
    const std::uint64_t baby_span = 1ull << table.baby_bits;
    const std::uint64_t bound = sec.plaintext_bound();
    GroupElement cur = target;
    for (std::uint64_t giant = 0; giant * baby_span < bound; ++giant) {
        auto it = table.baby.find(cur);
        if (it != table.baby.end()) {
            std::uint64_t m = giant * baby_span + it->second;
            if (m >= bound) break;
            return m;
        }
        cur = ge_add(cur, table.giant_step);
    }
    raise(Errc::decode_failure, "plaintext outside decryption range");
}

bool hom_decrypts_to(const Scalar& dk, const HomCiphertext& c, std::uint64_t m) {
    return ge_sub(c.c2, ge_mul(dk, c.c1)) == ge_base_mul_u64(m);
}

HomCiphertext hom_add(const HomCiphertext& a, const HomCiphertext& b) {
    return {ge_add(a.c1, b.c1), ge_add(a.c2, b.c2)};
}

HomCiphertext hom_neg(const HomCiphertext& c) {
    return {ge_sub(ge_identity(), c.c1), ge_sub(ge_identity(), c.c2)};
}

HomCiphertext hom_zero() { return {ge_identity(), ge_identity()}; }

}  // namespace dtl

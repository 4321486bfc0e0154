#include "dtl/commit.hpp"

#include "dtl/errors.hpp"
#include "dtl/hash.hpp"

namespace dtl {

CoinPublicKey commit(std::uint64_t data, const Digest& randomness, const SecParams& sec) {
    if (data >= sec.plaintext_bound())
        raise(Errc::range_violation, "committed data out of range");
    return CoinPublicKey{Hasher(Domain::commit).u64(data).raw(randomness).finish()};
}

bool commit_verify(std::uint64_t data, const CoinPublicKey& cm, const Digest& randomness,
                   const SecParams& sec) {
    if (data >= sec.plaintext_bound()) return false;
    return commit(data, randomness, sec) == cm;
}

}  // namespace dtl

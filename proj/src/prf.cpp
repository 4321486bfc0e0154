#include "dtl/prf.hpp"

#include "dtl/errors.hpp"

namespace dtl {

Digest prf_eval(Domain domain, ByteView key, ByteView input, const SecParams& sec) {
    if (key.size() != sec.lambda_bytes())
        raise(Errc::invalid_key, "PRF key must be lambda_bits/8 bytes");
    return Hasher(domain).blob(key).blob(input).finish();
}

CoinPublicKey tag_kgen(const CoinSecret& csk, const SecParams& sec) {
    return CoinPublicKey{prf_eval(Domain::prf_kgen, csk.k, csk.r, sec)};
}

Tag tag_eval(const CoinSecret& csk, const SecParams& sec) {
    Bytes zeros(sec.lambda_bytes(), 0);
    return Tag{prf_eval(Domain::prf_tag, csk.k, zeros, sec)};
}

}  // namespace dtl

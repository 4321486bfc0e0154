#pragma once

#include <cstdint>

#include "dtl/bytes.hpp"
#include "dtl/rng.hpp"

namespace dtl {

// Prime-order group (ristretto255): canonical 32-byte encodings, identity
// encodes as all zeros, scalars are little-endian mod the group order.
using GroupElement = std::array<std::uint8_t, 32>;
using Scalar = std::array<std::uint8_t, 32>;

GroupElement ge_identity();
bool ge_is_identity(const GroupElement& p);
bool ge_is_valid(const GroupElement& p);

GroupElement ge_add(const GroupElement& a, const GroupElement& b);
GroupElement ge_sub(const GroupElement& a, const GroupElement& b);

// n * p, with identity in, zero scalar, and identity out all well-defined.
GroupElement ge_mul(const Scalar& n, const GroupElement& p);
GroupElement ge_base_mul(const Scalar& n);
GroupElement ge_base_mul_u64(std::uint64_t n);

Scalar scalar_zero();
bool scalar_is_zero(const Scalar& s);
Scalar scalar_from_u64(std::uint64_t v);
// Uniform nonzero scalar from 64 RNG bytes reduced mod the order.
Scalar scalar_random(Rng& rng);
// Deterministic nonzero scalar from arbitrary seed bytes.
Scalar scalar_from_seed(ByteView seed);

}  // namespace dtl

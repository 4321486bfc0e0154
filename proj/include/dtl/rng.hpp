#pragma once

#include <cstdint>
#include <random>

#include "dtl/bytes.hpp"

namespace dtl {

// Deterministic RNG handed to every sampling operation so experiments and
// scenarios replay bit-identically. mt19937_64 output is fixed by the
// standard, which makes transcripts portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    std::uint64_t below(std::uint64_t bound) {
        // bound is tiny compared to 2^64 everywhere we use this; modulo
        // bias is irrelevant for test-harness sampling.
        return bound == 0 ? 0 : next_u64() % bound;
    }

    bool coin() { return (next_u64() & 1) != 0; }

    void fill(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t w = next_u64();
            for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
                out[i] = static_cast<std::uint8_t>(w >> (8 * b));
            }
        }
    }

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }

    // Derives an independent child stream; used when a component needs its
    // own RNG without disturbing the parent sequence.
    Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 engine_;
};

}  // namespace dtl

#include "wqmc/rng.hpp"

#include <stdexcept>

namespace wqmc {

namespace {

// 64-bit finalizer (murmur3 style): full avalanche, integer-only.
std::uint64_t fmix64(std::uint64_t x) noexcept {
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ULL;
    x ^= x >> 33;
    return x;
}

} // namespace

std::uint64_t CounterRng::at(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t index) noexcept {
    std::uint64_t x = fmix64(index + 0x9E3779B97F4A7C15ULL);
    x = fmix64(x ^ (stream + 0xBF58476D1CE4E5B9ULL));
    x = fmix64(x ^ (seed + 0x94D049BB133111EBULL));
    return x;
}

std::uint64_t CounterRng::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    if (bound == 1) return 0;
    // Reject the low (2^64 mod bound) outputs so residues are equidistributed.
    const std::uint64_t reject_below = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= reject_below) return r % bound;
    }
}

} // namespace wqmc

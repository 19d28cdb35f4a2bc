#ifndef RIOT_STABLE_HASH_HPP
#define RIOT_STABLE_HASH_HPP

#include <cstdint>
#include <string_view>

#include "riot/message.hpp"

namespace riot {

/// FNV-1a, 64 bit. Deterministic across runs and platforms, which keeps
/// hash routing and sketch contents reproducible between benchmark runs.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (char c : data) {
        h ^= static_cast<std::uint8_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

/// Extra mixing round; FNV alone is weak in the low bits for short keys.
constexpr std::uint64_t mix64(std::uint64_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ull;
    h ^= h >> 33;
    return h;
}

/// Stable hash of a scalar's canonical string form.
inline std::uint64_t hashScalar(const Scalar& v, std::uint64_t seed = kFnvOffset) {
    return mix64(fnv1a64(canonicalForm(v), seed));
}

inline std::uint64_t hashKey(std::string_view key, std::uint64_t seed = kFnvOffset) {
    return mix64(fnv1a64(key, seed));
}

}  // namespace riot

#endif

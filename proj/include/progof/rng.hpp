#pragma once

#include <cstdint>
#include <string_view>

namespace progof {

// ---------------------------------------------------------------------------
// Counter-based stream derivation.
//
// Every Monte Carlo replicate owns an independent generator whose state is a
// pure function of (master seed, experiment tag, replicate index, attempt).
// Parallel and sequential runs therefore produce bit-identical results: no
// generator state is ever shared or advanced across replicates.
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// FNV-1a, used for experiment tags and scheme hashes.
inline constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline constexpr std::uint64_t fnv1a_mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffULL;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// xoshiro256++, seeded through splitmix64 from a mixed key.
class Rng {
public:
    using result_type = std::uint64_t;

    Rng() : Rng(0, 0, 0, 0) {}

    Rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t index, std::uint64_t attempt = 0) {
        std::uint64_t key = seed;
        key = detail::splitmix64(key) ^ tag;
        key = detail::splitmix64(key) ^ index;
        key = detail::splitmix64(key) ^ attempt;
        std::uint64_t sm = detail::splitmix64(key);
        for (auto& w : s_) w = detail::splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = detail::rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl(s_[3], 45);
        return result;
    }

    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    // Uniform on the open interval (0,1): 53-bit mantissa shifted off zero.
    double uniform() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t s_[4];
};

}  // namespace progof

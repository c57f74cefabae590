#pragma once

#include <cstdint>

namespace blendsim::rng {

/// Identifier recorded in run manifests so reports are attributable to the
/// exact draw scheme.
inline constexpr const char* kGeneratorId = "splitmix64-counter";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Keyed draw counter: every uniform is a pure function of
/// (seed, run, dist, attempt, sub), independent of execution order.
struct DrawKey {
    std::uint64_t seed = 0;
    std::uint64_t run = 0;
    std::uint64_t dist = 0;
    std::uint64_t attempt = 0;
    std::uint64_t sub = 0;
};

constexpr std::uint64_t mix(const DrawKey& key) {
    std::uint64_t h = splitmix64(key.seed);
    h = splitmix64(h ^ key.run);
    h = splitmix64(h ^ key.dist);
    h = splitmix64(h ^ key.attempt);
    h = splitmix64(h ^ key.sub);
    return h;
}

/// Uniform in [0, 1) with 53-bit resolution.
constexpr double uniform01(const DrawKey& key) {
    return static_cast<double>(mix(key) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller, truncated to |z| <= 4 by deterministic
/// rejection over the sub-counter.
double standard_normal(DrawKey key);

}  // namespace blendsim::rng

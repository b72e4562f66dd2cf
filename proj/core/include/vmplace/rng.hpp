#pragma once

#include <cstdint>
#include <string_view>

namespace vmplace::rng {

// All randomness in this project flows through SplitMix64 (Steele,
// Lea, Flood: "Fast splittable pseudorandom number generators", 2014).
// The generator is fixed so that seeds are portable across builds and
// platforms; see README "Determinism and random streams".

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

/// Counter-based stream: state advances by the golden gamma, outputs
/// are the mixed counter values.
class SplitMix64 {
public:
    constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 bits of precision.
    constexpr double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive; modulo reduction,
    /// bias is negligible for the small n used here.
    constexpr std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    /// Uniform double in [lo, hi).
    constexpr double next_in(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a run seed and a role tag,
/// so that e.g. VM generation and spike draws never share a stream.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a over the tag
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return mix64(seed ^ h);
}

/// Stateless per-(seed, vm, tick) uniform draw in [0, 1); drives the
/// spike process so demand at a tick needs no generator history.
constexpr double tick_draw(std::uint64_t seed, std::uint64_t vm_id, std::uint64_t tick) {
    std::uint64_t h = mix64(seed + kGoldenGamma * (vm_id + 1));
    h = mix64(h + kGoldenGamma * tick);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace vmplace::rng

#pragma once

#include <cstdint>

namespace holderkit {

/// SplitMix64. Hand-rolled instead of <random> because the standard
/// distributions are implementation-defined, which would break bit-for-bit
/// reproducibility across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi], both ends included.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + next() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based substream for (seed, index): each trial draws from its own
/// generator, so results do not depend on evaluation order or thread count.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(detail::mix64(seed + 0x9E3779B97F4A7C15ull) ^
                      detail::mix64(index * 0xA0761D6478BD642Full + 0xE7037ED1A0B428DBull));
}

}  // namespace holderkit

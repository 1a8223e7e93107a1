#pragma once

#include <cstdint>

namespace neutro {

/// SplitMix64: the 64-bit mixing generator of Steele, Lea & Flood, used for
/// all seeded sampling so that a seed reproduces the same stream in any
/// implementation or language. State advances by the golden-gamma constant;
/// output is the finalizer of the advanced state.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), from the top 53 bits.
    constexpr double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace neutro

#pragma once

#include <cstdint>

namespace czi {

// SplitMix64 (Steele/Lea/Flood). Used instead of <random> engines so that
// seeded runs produce identical streams on every platform and standard
// library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // decorrelated child stream; parallel workers draw from
    // derive(seed, index) so scheduling cannot change the values
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed);
        mixer.state_ += (index + 1) * 0x9E3779B97F4A7C15ULL;
        return SplitMix64(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

} // namespace czi

#pragma once

#include <cstdint>

namespace netform {

/// splitmix64 (Steele/Lea/Flood; Vigna's fixed-increment variant). Used
/// everywhere randomness is needed so trials are reproducible across
/// platforms; substreams are derived by mixing a master seed with a stream
/// index, which keeps parallel trials independent of scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
        SplitMix64 mixer(master_seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        return SplitMix64(mixer.next_u64());
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound) without modulo bias (Lemire).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        while (true) {
            const std::uint64_t x = next_u64();
            const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
            const std::uint64_t low = static_cast<std::uint64_t>(m);
            if (low >= bound || low >= (0 - bound) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    bool next_bool() { return next_u64() & 1ull; }

private:
    std::uint64_t state_;
};

inline const char* rng_algorithm_name() { return "splitmix64"; }

}  // namespace netform

#pragma once

#include <cstdint>

namespace trigather {

/// splitmix64 (Steele, Lea, Flood / Vigna). The one generator used for every
/// seeded feature, so identical seeds reproduce identical runs on every
/// platform. Constants: increment 0x9E3779B97F4A7C15, mixers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, bound) by modulo reduction (bound must be > 0).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return (next() & 1ull) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace trigather

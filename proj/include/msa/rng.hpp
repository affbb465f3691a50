#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace msa {

/// Seeded 64-bit Mersenne Twister with distribution code spelled out here,
/// so seeded runs do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n) {
        const std::uint64_t bound = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return static_cast<std::size_t>(v % bound);
    }
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace msa

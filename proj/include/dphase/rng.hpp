#pragma once

#include <cstdint>
#include <random>

namespace dphase {

/// Deterministic uniform doubles on top of mt19937_64. The standard
/// distributions are implementation-defined, so CSV/report byte-identity
/// across toolchains needs a fixed mapping from raw 64-bit draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// Stable per-index stream derived from a single master seed (splitmix64 hop).
inline Rng rng_stream(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t x = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return Rng(x ^ (x >> 31));
}

}  // namespace dphase

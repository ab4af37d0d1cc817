#pragma once

#include <complex>
#include <cstdint>

namespace distkit {

// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937 +
// std::normal_distribution so that seeded outputs are identical across
// standard libraries, which the reproducibility contracts require.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; caches the spare deviate.
    double next_gaussian();

    std::complex<double> next_complex_gaussian() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable per-task seed derivation: mixes the index into the base seed so that
// task k's stream does not depend on how many tasks precede it.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace distkit

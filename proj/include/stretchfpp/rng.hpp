#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sfpp {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seeded stream keyed by (seed, stream index). Same key, same sequence, on any
// platform: mt19937_64's output is fully specified by the standard and the
// exponential transform below avoids std::exponential_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL))) {}

    // Uniform on (0, 1], 53-bit resolution.
    double uniform_open0() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Exp(1) by inverse CDF; strictly positive except when U == 1.
    double exp1() { return -std::log(uniform_open0()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace sfpp

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace coplan {

// Seeded random source with all distribution transforms implemented in-house.
// mt19937_64 output is fully specified by the standard, while the <random>
// distribution adaptors are not; doing the transforms here makes equal seeds
// give equal streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
        if (rem == n - 1) {
            return gen_() % n;  // n divides 2^64, no rejection needed
        }
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t x = gen_();
        while (x >= limit) {
            x = gen_();
        }
        return x % n;
    }

    // One Gaussian draw via Box-Muller. Consumes exactly two uniforms so the
    // stream alignment does not depend on call history.
    double normal(double mean, double sigma) {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sigma * z;
    }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable seed for a named sub-experiment. FNV-1a over the key, mixed with the
// master seed, so every grid cell is independently re-runnable.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view key) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : key) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return splitmix64(master ^ splitmix64(h));
}

}  // namespace coplan

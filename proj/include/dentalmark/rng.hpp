#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dentalmark/vec3.hpp"

namespace dentalmark {

/// splitmix64 round; used to derive independent stream seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seeded random source. Built on mt19937_64 with fixed value mappings;
/// std::uniform_*_distribution output is implementation-defined, so the
/// mappings here are spelled out to keep seeded results portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [0, n). Rejection sampling, bias-free.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    /// Standard normal via Box-Muller (cosine branch).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    /// Uniform direction on the unit sphere.
    Vec3 unit_vector() {
        for (;;) {
            const Vec3 v{normal(), normal(), normal()};
            const double n = norm(v);
            if (n > 1e-12) return v / n;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dentalmark

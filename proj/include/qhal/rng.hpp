#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qhal {

/// Deterministic random generator for fixtures and verification sampling.
///
/// Bit-exact reproducibility across platforms matters more here than
/// statistical sophistication, and the standard library distributions are
/// implementation-defined, so this is a self-contained xoshiro256++ with a
/// splitmix64-seeded state and an explicit Box-Muller transform:
///
///   * seeding: state[i] = splitmix64(seed), four successive outputs
///   * uniform01: top 53 bits of next() scaled by 2^-53, in [0, 1)
///   * normal: polar-free Box-Muller on two uniforms (u clamped away from 0)
///
/// Identical seeds therefore yield identical fixture bytes everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : s_) {
            // splitmix64 step
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection-free scaling (bound small
    /// relative to 2^64, bias is negligible for index sampling and the result
    /// is still fully deterministic).
    uint64_t uniform_below(uint64_t bound) { return next() % bound; }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace qhal

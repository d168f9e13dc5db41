#pragma once

#include <cstdint>
#include <cmath>

namespace qclab {

/// Deterministic, platform-stable RNG (xoshiro256** seeded by splitmix64).
/// std::uniform_real_distribution is implementation-defined, so samplers use
/// this instead to keep outputs byte-identical under a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // modulo bias is negligible for n << 2^64 but avoid it anyway
        std::uint64_t lim = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive lo, exclusive hi
        return lo + static_cast<std::int64_t>(uniform_index(static_cast<std::uint64_t>(hi - lo)));
    }

    /// Uniform point in the open unit disk.
    void unit_disk(double& x, double& y) {
        do {
            x = uniform(-1.0, 1.0);
            y = uniform(-1.0, 1.0);
        } while (x * x + y * y >= 1.0);
    }

    /// Fork an independent stream (for per-shard determinism).
    Rng fork(std::uint64_t stream) { return Rng(next() ^ (0x5851f42d4c957f2dULL * (stream + 1))); }

  private:
    std::uint64_t s_[4];
};

}  // namespace qclab

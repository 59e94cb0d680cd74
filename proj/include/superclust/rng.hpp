#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace superclust {

/// SplitMix64 finalizer. Used to mix seeds; the output stream is stable
/// across platforms and documented (Steele et al., "Fast splittable
/// pseudorandom number generators").
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives the seed for (stream a, stream b) from a base seed. Two-stage
/// splitmix so that nearby (a, b) pairs land far apart.
inline std::uint64_t stable_mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(seed ^ splitmix64(a + 0x9e3779b97f4a7c15ULL)) ^
                      splitmix64(b + 0x7f4a7c159e3779b9ULL));
}

/// Seeded PRNG with a platform-stable stream. std::mt19937_64's raw output
/// is pinned by the standard; the derived draws below avoid
/// std::uniform_*_distribution, whose streams are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw in [0, bound) via rejection of the modulo tail.
    std::size_t uniform_index(std::size_t bound) {
        const std::uint64_t n = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::size_t>(x % n);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

    /// Fisher-Yates shuffle with our own index draws.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices sampled uniformly from [0, n), in draw order.
    std::vector<std::size_t> sample_distinct(std::size_t k, std::size_t n) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + uniform_index(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace superclust

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kgtask {

// Deterministic, platform-stable RNG. std::mt19937_64 has a standard-defined
// sequence, but the std distributions do not, so all draws go through the
// helpers below. Every consumer derives its own stream so that results do not
// depend on call interleaving.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(splitmix(seed)) {}

    // Derive an independent stream from a base seed plus stream tags.
    static Rng derive(uint64_t seed, std::initializer_list<uint64_t> tags) {
        uint64_t s = seed;
        for (uint64_t t : tags) s = mix(s, t);
        return Rng(s);
    }

    uint64_t next_u64() {
        // xorshift* on a splitmix-initialized state
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Unbiased integer in [0, bound)
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1)
    double unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool coin() { return (next_u64() & 1ULL) != 0; }

    // Box-Muller, cached second variate
    double normal(double mean, double stddev) {
        if (has_cache_) {
            has_cache_ = false;
            return mean + stddev * cache_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = unit();
        double u2 = unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cache_ = r * std::sin(a);
        has_cache_ = true;
        return mean + stddev * r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(below(v.size()))];
    }

private:
    static uint64_t splitmix(uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    static uint64_t mix(uint64_t a, uint64_t b) {
        return splitmix(a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2) + splitmix(b)));
    }

    uint64_t state_;
    double cache_ = 0.0;
    bool has_cache_ = false;
};

// FNV-1a 64-bit, used for file checksums and plan hashes.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace kgtask

#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace etop {

// All randomness in the library flows through this header. The generators
// are fixed, published algorithms (SplitMix64 for seeding and stream
// derivation, xoshiro256** 1.0 for the main stream) so that instances and
// solver runs reproduce bit-for-bit on any platform, independent of the
// standard library's <random> distributions.

// One SplitMix64 step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
    return splitmix64_next(x);
}

// Derives an independent stream seed from a master seed and a path of tags
// (e.g. {scale, instance, algorithm, run}). Chained SplitMix64 mixing makes
// the result sensitive to both the order and the length of the path, so
// distinct paths land in distinct streams.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = mix64(master);
    for (std::uint64_t tag : path) {
        state = mix64(state ^ mix64(tag + 0x9E3779B97F4A7C15ULL));
    }
    return state;
}

// xoshiro256** 1.0 (Blackman, Vigna 2018), state seeded via SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool bernoulli(double p) { return next_double() < p; }

    // Unbiased integer in [0, n) by thresholded rejection.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        assert(lo <= hi);
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Fisher-Yates; std::shuffle is not portable across standard libraries.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace etop

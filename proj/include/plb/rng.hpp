#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace plb {

using Rng = std::mt19937_64;

// SplitMix64: seed whitener / cheap stream splitter.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline Rng make_rng(std::uint64_t seed) {
    return Rng(SplitMix64(seed).next());
}

// Two independent engine seeds derived from one trial seed
// (environment noise stream, algorithm randomness stream).
inline std::pair<std::uint64_t, std::uint64_t> split_seed(std::uint64_t seed) {
    SplitMix64 sm(seed);
    std::uint64_t a = sm.next();
    std::uint64_t b = sm.next();
    return {a, b};
}

// Uniform double in [0, 1), 53 mantissa bits, engine-exact (no
// std::uniform_real_distribution, so sequences are identical across
// standard libraries).
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Moves `count` uniformly chosen elements (without replacement) to the
// front of `v`; the remainder stays in v[count..).
template <typename T>
void partial_shuffle(std::vector<T>& v, std::size_t count, Rng& rng) {
    for (std::size_t i = 0; i < count && i + 1 < v.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, v.size() - i));
        std::swap(v[i], v[j]);
    }
}

}  // namespace plb

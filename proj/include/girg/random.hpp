#pragma once

#include <cstdint>
#include <random>

namespace girg {

/// Independent variate families drawn from one model seed.
enum class Stream : std::uint64_t {
    weight = 1,
    position = 2,
    pair_y1 = 3,
    pair_y2 = 4,
    f_inclusion = 5,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// One keyed variate family; index i yields the i-th SplitMix64 output.
class StreamRng {
public:
    explicit constexpr StreamRng(std::uint64_t key) : key_(key) {}

    constexpr std::uint64_t bits(std::uint64_t index) const {
        return splitmix64(key_ + index * 0xD1B54A32D192ED03ULL);
    }

    /// Uniform on [0,1) with 53 random bits.
    constexpr double uniform(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0,1].
    constexpr double uniform_open_closed(std::uint64_t index) const {
        return static_cast<double>((bits(index) >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

/// Counter-based generator: every variate is a pure function of
/// (seed, stream, index), so evaluation order never changes a sample.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed) {}

    constexpr std::uint64_t seed() const { return seed_; }

    constexpr StreamRng stream(Stream s) const {
        return StreamRng(splitmix64(seed_ ^ splitmix64(static_cast<std::uint64_t>(s))));
    }

    double uniform(Stream s, std::uint64_t index) const { return stream(s).uniform(index); }

private:
    std::uint64_t seed_;
};

/// Canonical index of the unordered pair {u, v}, u != v.
inline constexpr std::uint64_t pair_index(std::uint64_t u, std::uint64_t v) {
    if (u > v) {
        std::uint64_t t = u;
        u = v;
        v = t;
    }
    return v * (v - 1) / 2 + u;
}

using Rng = std::mt19937_64;

}  // namespace girg

#ifndef DCOVER_RNG_HPP
#define DCOVER_RNG_HPP

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dcover {

// One SplitMix64 step. Advances `state` and returns the mixed output.
// Used for seed derivation; the bulk generator below is mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Order-sensitive combine: derive a child seed from (parent seed, index).
// seed_mix(a, b) != seed_mix(b, a) in general, which is what we want when
// fanning one base seed out over families / sizes / replicates.
inline std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a;
    std::uint64_t x = splitmix64(s);
    s = x ^ (b + 0x9e3779b97f4a7c15ull);
    return splitmix64(s);
}

// FNV-1a, for hashing short strings (family names) into the seed chain.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Deterministic generator. mt19937_64's output sequence is pinned by the
// C++ standard, so streams are reproducible across platforms and compilers.
// The standard *distributions* are not pinned, hence the hand-rolled
// transforms below (53-bit mantissa fill, masked rejection sampling).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53 random bits (every double in range reachable).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi). Half-open as long as hi - lo is representable.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n); n = 0 or 1 returns 0.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t mask = ~0ull >> std::countl_zero(n - 1);
        for (;;) {
            const std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    // Fisher-Yates. Same seed, same element count -> same permutation.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace dcover

#endif

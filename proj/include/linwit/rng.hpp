#pragma once
// Deterministic seeded randomness. One 64-bit master seed is split into
// independent streams with split_seed; there is no global RNG state and no
// reliance on implementation-defined std distributions, so identical seeds
// give identical bytes on every platform.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace linwit {

// splitmix64 finalizer, also used as the seed-splitting mixer.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), unbiased by rejection.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int intIn(int lo, int hi) { return lo + static_cast<int>(below(uint64_t(hi - lo + 1))); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t k = v.size(); k > 1; --k)
            std::swap(v[k - 1], v[size_t(below(k))]);
    }
};

// Derive a child seed from a master seed and a path of stream labels.
inline uint64_t split_seed(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t h = mix64(master);
    for (uint64_t p : path) h = mix64(h ^ mix64(p + 0x9e3779b97f4a7c15ULL));
    return h;
}

} // namespace linwit

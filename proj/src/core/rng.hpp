#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace primanal {

// Seeded deterministic RNG. All randomized analyses run through this wrapper
// so that a given seed reproduces byte-identical results; we avoid
// std::uniform_int_distribution because its output is not pinned by the
// standard.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1, by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Derive an independent stream; distinct tags give distinct streams.
    Rng fork(uint64_t tag) { return Rng(mix(eng_(), tag)); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    std::vector<uint32_t> random_permutation(uint32_t n) {
        std::vector<uint32_t> p(n);
        for (uint32_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

    static uint64_t mix(uint64_t a, uint64_t b) {
        // splitmix64 finalizer over the combined state
        uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace primanal

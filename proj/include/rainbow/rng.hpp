#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rainbow {

// splitmix64 step; used to derive stable per-task seeds from a master seed.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Derivation is a pure function of (master, path), so results do not depend
// on scheduling or worker count.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t s = mix64(master ^ 0x6a09e667f3bcc909ull);
    for (uint64_t p : path) s = mix64(s ^ mix64(p));
    return s;
}

// Deterministic RNG. mt19937_64 output is pinned by the standard, and the
// derived quantities below avoid std::distributions (whose streams are
// implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t u64() { return eng_(); }

    double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // uniform in [0, n), unbiased via rejection
    int below(int n) {
        uint64_t bound = ~0ull - ~0ull % static_cast<uint64_t>(n);
        uint64_t x;
        do {
            x = u64();
        } while (x >= bound);
        return static_cast<int>(x % static_cast<uint64_t>(n));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace rainbow

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fgof {

// Stateless mixer used to derive independent per-replicate seeds from a master
// seed and one or two indices. Any worker may compute the seed for any
// replicate, which is what makes the parallel engines scheduling-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (a + 0x632be59bd9b4e019ULL));
    s = splitmix64(s ^ (b + 0x9e3779b97f4a7c15ULL));
    return s;
}

// Seeded generator with explicit draw formulas. Only the mt19937_64 bit stream
// comes from the standard library (its output sequence is pinned by the
// standard), so draws are bit-reproducible for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // in [0, 1)
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // rate-1 exponential
    double exponential() { return -std::log1p(-uniform01()); }

    // Exact count via cumulative exponential arrivals; fine for the means used
    // here (a few hundred at most per draw).
    std::size_t poisson(double mean) {
        std::size_t n = 0;
        double acc = exponential();
        while (acc <= mean) {
            ++n;
            acc += exponential();
        }
        return n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace fgof

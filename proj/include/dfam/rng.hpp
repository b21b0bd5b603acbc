#pragma once
// Seeded RNG with a fixed cross-platform sequence.  std::mt19937_64 has a
// standard-specified output stream; the distributions do not, so bounded
// draws and shuffles are implemented here (masked rejection sampling).
// Derived streams (seed remixed with a worker salt) give independent parallel
// workers; verdict-bearing runs default to a single stream so reports are
// bit-reproducible.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace dfam {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return eng_(); }

    // Uniform on [0, bound); unbiased via power-of-two masking + rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0,1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent stream for worker `salt`, deterministic in (seed, salt).
    Rng derive(std::uint64_t salt) const {
        return Rng(splitmix64(seed_ ^ splitmix64(salt + 0x51ED2701A93Bull)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace dfam

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace eafs {

// Deterministic random source. The engine is std::mt19937_64 (bit-exact by
// the standard); every distribution is hand-rolled on top of it so generated
// sequences are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1), 53 random bits.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Unbiased uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % n;
        }
    }

    // Poisson-distributed count with mean lambda. Exact for any lambda >= 0:
    // a Poisson(a + b) draw is the sum of independent Poisson(a) and
    // Poisson(b) draws, so large means are split to keep exp(-lambda) away
    // from underflow.
    int poisson(double lambda) {
        int total = 0;
        while (lambda > 0.0) {
            const double chunk = lambda < 30.0 ? lambda : 30.0;
            const double limit = std::exp(-chunk);
            int k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= u01();
            } while (p > limit);
            total += k - 1;
            lambda -= chunk;
        }
        return total;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; derives independent seed streams from one base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace eafs

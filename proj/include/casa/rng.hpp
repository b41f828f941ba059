#pragma once

#include <cstdint>
#include <random>

namespace casa {

// splitmix64 finalizer; used to derive uncorrelated seeds for parallel
// streams (per bidder, per trial) from one scenario seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ull));
}

// Deterministic RNG. Wraps mt19937_64 but does all value conversion itself,
// so sequences are identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return u01() < p; }

private:
    std::mt19937_64 eng_;
};

}  // namespace casa

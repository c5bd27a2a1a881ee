#ifndef PTOPO_RNG_HPP
#define PTOPO_RNG_HPP

#include <cstdint>

namespace ptopo {

// splitmix64: tiny, portable, identical streams on every platform for a
// given seed. The standard-library engines' real distributions are
// implementation-defined, so all randomness here derives from raw bits.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Stable derivation of per-instance seeds from a campaign seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    SplitMix64 rng(base ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    return rng.next();
}

} // namespace ptopo

#endif

#ifndef KNOTPACK_RNG_HPP
#define KNOTPACK_RNG_HPP

#include <cmath>
#include <cstdint>

namespace knotpack {

// SplitMix64 (Steele, Lea, Flood 2014). All randomness in the project flows
// from one of these, seeded explicitly, so every run is reproducible from a
// single 64-bit seed. Streams are derived by hashing (seed, stream id), which
// keeps independent components (annealing chains, campaigns, test corpora)
// decorrelated without shared state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_int(std::uint64_t n) {
        // Rejection-free would bias tiny amounts for huge n; n here is small
        // (vertex counts, grid sizes), so 64-bit modulo bias is negligible,
        // but use rejection anyway to keep the contract exact.
        std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller (implemented here rather than through
    // std::normal_distribution, whose output is not pinned by the standard).
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // Deterministic sub-stream generator.
    SplitMix64 derive(std::uint64_t stream) const {
        SplitMix64 mixer(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace knotpack

#endif  // KNOTPACK_RNG_HPP

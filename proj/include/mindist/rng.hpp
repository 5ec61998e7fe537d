#pragma once

#include <cmath>
#include <cstdint>

namespace mindist {

/// Counter-based 64-bit generator (splitmix64 stepping). Each (seed, stream)
/// pair is an independent substream, so trials can run in any order or in
/// parallel and still see identical randomness. The mapping from bits to
/// doubles and the Box-Muller transform below are fixed by this
/// implementation, not by the platform's <random>, so one build reproduces
/// itself run to run.
class SplitMix64 {
public:
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(scramble(scramble(seed) + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return scramble(state_);
    }

    /// Uniform in (0, 1].
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

private:
    static std::uint64_t scramble(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

/// Standard normal samples via Box-Muller on SplitMix64 output.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit();
        const double u2 = rng_.next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mindist

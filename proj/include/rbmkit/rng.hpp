#pragma once

#include <cstdint>
#include <stdexcept>

namespace rbmkit {

// Deterministic counter-style random source. A (seed, stream) pair fully
// determines the draw sequence; fork() derives an independent stream from
// an integer tag, so per-example streams do not depend on the order in
// which minibatches are visited.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), state_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("bernoulli: probability outside [0,1]");
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    // Standard normal via Box-Muller (no cached spare, to keep the
    // draw count per call fixed and the stream reproducible).
    double normal();

    // Integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below: n must be positive");
        return next_u64() % n;
    }

    // Independent derived stream identified by (this stream, tag).
    RandomSource fork(std::uint64_t tag) const {
        return RandomSource(seed_, mix(stream_ ^ mix(tag + 0x9e3779b97f4a7c15ULL)));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_;
};

} // namespace rbmkit

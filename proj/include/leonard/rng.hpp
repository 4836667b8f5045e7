#ifndef LEONARD_RNG_HPP
#define LEONARD_RNG_HPP

#include <cstdint>

namespace leonard {

/// SplitMix64: the fixture PRNG. Fixed algorithm so generated instances are
/// reproducible bit-for-bit across platforms and bindings.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection keeps it unbiased
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0xd2b74407b1ce6e93ULL); }

private:
    std::uint64_t state_;
};

} // namespace leonard

#endif

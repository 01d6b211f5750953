#pragma once

#include <cstdint>

namespace chordstats {

// splitmix64 (Steele/Lea/Vigna). Fully specified by the seed, so sequences
// reproduce bit-for-bit across platforms; the name and version below are
// what the CLI pins in its output metadata.
inline constexpr const char *kRngAlgorithm = "splitmix64";
inline constexpr const char *kRngVersion = "1.0";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); rejection keeps it unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Seed for an independent stream, derived from a master seed.
    static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
        SplitMix64 g(master ^ (0xa0761d6478bd642fULL * (stream + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

} // namespace chordstats

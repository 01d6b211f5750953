#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chordstats/exact.hpp"

namespace chordstats::oracle {

// Perfect matching of 2n vertices on a line with one marked chord. Chords
// are indexed by ascending left endpoint, so "mark chord i" is well defined.
struct MarkedMatching {
    int n = 0;
    std::vector<int> partner;  // fixed-point-free involution on 0..2n-1
    int marked = 0;            // chord index in [0, n-1]
};

// Per-diagram tally of the four relative positions; the counts always
// partition the other n-1 chords.
struct QuadCount {
    int crossing = 0;
    int contained = 0;
    int containing = 0;
    int excluded = 0;
};

// Classifies every non-marked chord relative to the marked one. Throws on a
// malformed involution or if the partition identity k+c+g+x = n-1 fails.
QuadCount classify(const MarkedMatching &m);

// Exhaustive enumeration is quick up to the default cap; n = 9 costs a few
// billion primitive steps and hides behind allow_large.
inline constexpr int kEnumerationCap = 8;
inline constexpr int kEnumerationCapLarge = 9;

struct EnumerationResult {
    std::array<CountTable, 4> tables;  // K, C, G, X in StatKind order
    Int configurations;                // (matching, mark) pairs visited
    std::uint64_t partition_violations = 0;
};

// Visits every perfect matching of 2n vertices exactly once and every choice
// of marked chord; tallies are deterministic for any thread count.
EnumerationResult enumerate_counts(int n, bool allow_large = false, int threads = 1);

// Uniform draw over the (2n-1)!! matchings times the n marks; deterministic
// given the seed.
MarkedMatching sample_uniform(int n, std::uint64_t seed);

struct EmpiricalDistribution {
    StatKind stat;
    std::vector<std::uint64_t> counts;  // hits per p = 0..n-1
    std::vector<double> frequency;
    std::vector<double> std_error;      // sqrt(f(1-f)/reps)
    double mean = 0.0;
};

struct MonteCarloResult {
    int n = 0;
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    std::array<EmpiricalDistribution, 4> distributions;
};

MonteCarloResult monte_carlo(int n, std::uint64_t reps, std::uint64_t seed);

// Pearson chi-square of the empirical counts against exact cell
// probabilities (cells with zero probability are skipped).
double chi_square(const std::vector<std::uint64_t> &counts,
                  const std::vector<Rat> &exact_probs, std::uint64_t reps);

} // namespace chordstats::oracle

#include <doctest.h>

#include <cmath>
#include <map>

#include "chordstats/exact.hpp"
#include "chordstats/oracle.hpp"

using namespace chordstats;
using oracle::MarkedMatching;
using oracle::QuadCount;

TEST_CASE("classify the three diagrams of two chords") {
    // chords (0,2),(1,3): interlaced
    QuadCount crossing = oracle::classify({2, {2, 3, 0, 1}, 0});
    CHECK(crossing.crossing == 1);
    CHECK(crossing.contained + crossing.containing + crossing.excluded == 0);

    // chords (0,1),(2,3): side by side
    QuadCount disjoint = oracle::classify({2, {1, 0, 3, 2}, 0});
    CHECK(disjoint.excluded == 1);

    // chords (0,3),(1,2): nested, marked outer chord contains the other
    QuadCount nested = oracle::classify({2, {3, 2, 1, 0}, 0});
    CHECK(nested.contained == 1);
    // ... and the inner chord sees a containing one
    QuadCount inner = oracle::classify({2, {3, 2, 1, 0}, 1});
    CHECK(inner.containing == 1);
}

TEST_CASE("classify rejects malformed input") {
    CHECK_THROWS_AS(oracle::classify({2, {1, 0, 3, 2}, 5}), std::invalid_argument);
    CHECK_THROWS_AS(oracle::classify({2, {0, 1, 2, 3}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(oracle::classify({2, {2, 3, 0}, 0}), std::invalid_argument);
}

TEST_CASE("enumeration reproduces the small tables") {
    oracle::EnumerationResult n1 = oracle::enumerate_counts(1);
    for (const CountTable &t : n1.tables) CHECK(t.counts == std::vector<Int>{1});

    oracle::EnumerationResult n2 = oracle::enumerate_counts(2);
    CHECK(n2.tables[0].counts == std::vector<Int>{4, 2});
    CHECK(n2.tables[1].counts == std::vector<Int>{5, 1});
    CHECK(n2.tables[2].counts == std::vector<Int>{5, 1});
    CHECK(n2.tables[3].counts == std::vector<Int>{4, 2});

    oracle::EnumerationResult n3 = oracle::enumerate_counts(3);
    CHECK(n3.tables[2].counts == std::vector<Int>{32, 11, 2});
    CHECK(n3.configurations == 45);
    CHECK(n3.partition_violations == 0);
}

TEST_CASE("enumeration agrees with the exact route up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        oracle::EnumerationResult res = oracle::enumerate_counts(n);
        CHECK(res.configurations == exact::total_configurations(n));
        CHECK(res.partition_violations == 0);
        for (const CountTable &t : res.tables) {
            CAPTURE(n);
            CAPTURE(stat_symbol(t.stat));
            CHECK(t.counts == exact::count_row(t.stat, n).counts);
        }
    }
}

TEST_CASE("threaded enumeration matches single-threaded") {
    oracle::EnumerationResult serial = oracle::enumerate_counts(6, false, 1);
    oracle::EnumerationResult parallel = oracle::enumerate_counts(6, false, 4);
    for (int s = 0; s < 4; ++s) CHECK(serial.tables[s].counts == parallel.tables[s].counts);
    CHECK(serial.configurations == parallel.configurations);
}

TEST_CASE("enumeration cap guards resources") {
    CHECK_THROWS_AS(oracle::enumerate_counts(9), std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_counts(10, true), std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_counts(0), std::invalid_argument);
}

TEST_CASE("sampler determinism and degenerate case") {
    MarkedMatching unique = oracle::sample_uniform(1, 12345);
    CHECK(unique.partner == std::vector<int>{1, 0});
    CHECK(unique.marked == 0);

    MarkedMatching a = oracle::sample_uniform(7, 99);
    MarkedMatching b = oracle::sample_uniform(7, 99);
    CHECK(a.partner == b.partner);
    CHECK(a.marked == b.marked);
    (void)oracle::classify(a);  // throws if malformed
}

TEST_CASE("sampler hits each n = 3 matching uniformly") {
    // 15 matchings; 10^6 draws; 4 standard errors of a 1/15 cell
    const std::uint64_t reps = 1000000;
    std::map<std::vector<int>, long> hits;
    for (std::uint64_t r = 0; r < reps; ++r)
        ++hits[oracle::sample_uniform(3, 5000 + r).partner];
    CHECK(hits.size() == 15);
    double expect = 1.0 / 15.0;
    double se = std::sqrt(expect * (1 - expect) / static_cast<double>(reps));
    for (const auto &[partner, count] : hits) {
        double freq = static_cast<double>(count) / static_cast<double>(reps);
        CHECK(std::fabs(freq - expect) < 4 * se);
    }
}

TEST_CASE("sampled crossing frequency at n = 2") {
    const std::uint64_t reps = 1000000;
    oracle::MonteCarloResult res = oracle::monte_carlo(2, reps, 2024);
    // exact law of the crossing count is (2/3, 1/3)
    CHECK(res.distributions[0].frequency[1] == doctest::Approx(1.0 / 3.0).epsilon(0.006));
    CHECK(std::fabs(res.distributions[0].frequency[1] - 1.0 / 3.0) < 0.002);
}

TEST_CASE("sampled excluded mean at n = 3") {
    oracle::MonteCarloResult res = oracle::monte_carlo(3, 1000000, 77);
    CHECK(std::fabs(res.distributions[3].mean - 2.0 / 3.0) < 0.01);
}

TEST_CASE("size marginal at n = 5 within three standard errors") {
    const std::uint64_t reps = 100000;
    SizeDistribution law = exact::size_distribution(5);
    std::vector<long> hits(law.probs.size(), 0);
    for (std::uint64_t r = 0; r < reps; ++r) {
        MarkedMatching m = oracle::sample_uniform(5, 31337 + r);
        int left = -1, right = -1, index = 0;
        for (int v = 0; v < 10; ++v) {
            if (m.partner[v] > v) {
                if (index == m.marked) {
                    left = v;
                    right = m.partner[v];
                }
                ++index;
            }
        }
        ++hits[right - left - 1];
    }
    for (std::size_t d = 0; d < hits.size(); ++d) {
        double expect = to_double(law.probs[d]);
        double se = std::sqrt(expect * (1 - expect) / static_cast<double>(reps));
        CAPTURE(d);
        CHECK(std::fabs(static_cast<double>(hits[d]) / static_cast<double>(reps) - expect) <
              3 * se);
    }
}

TEST_CASE("monte carlo reproducibility and degenerate n = 1") {
    oracle::MonteCarloResult a = oracle::monte_carlo(4, 2000, 9001);
    oracle::MonteCarloResult b = oracle::monte_carlo(4, 2000, 9001);
    for (int s = 0; s < 4; ++s) CHECK(a.distributions[s].counts == b.distributions[s].counts);

    oracle::MonteCarloResult tiny = oracle::monte_carlo(1, 10, 5);
    for (int s = 0; s < 4; ++s) CHECK(tiny.distributions[s].counts == std::vector<std::uint64_t>{10});
}

TEST_CASE("chi-square against the exact law is sane") {
    const std::uint64_t reps = 200000;
    oracle::MonteCarloResult res = oracle::monte_carlo(4, reps, 31415);
    std::vector<Rat> probs;
    Int total = exact::total_configurations(4);
    for (const Int &c : exact::count_row(StatKind::Crossing, 4).counts)
        probs.push_back(make_rat(c, total));
    double chi2 = oracle::chi_square(res.distributions[0].counts, probs, reps);
    // 3 degrees of freedom; far tails would signal a sampler bug
    CHECK(chi2 < 16.27);  // chi2(3) at the 0.1% level
}

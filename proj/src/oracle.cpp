#include "chordstats/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "chordstats/rng.hpp"

namespace chordstats::oracle {

namespace {

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

void check_involution(const MarkedMatching &m) {
    require_n(m.n);
    int twon = 2 * m.n;
    if (static_cast<int>(m.partner.size()) != twon)
        throw std::invalid_argument("partner array must have 2n entries");
    for (int v = 0; v < twon; ++v) {
        int w = m.partner[v];
        if (w < 0 || w >= twon || w == v || m.partner[w] != v)
            throw std::invalid_argument("partner array is not a fixed-point-free involution");
    }
    if (m.marked < 0 || m.marked >= m.n)
        throw std::invalid_argument("marked chord index out of range");
}

// Chord endpoints in left-endpoint order, written into left/right.
inline void chord_list(const std::vector<int> &partner, int twon, int *left, int *right) {
    int c = 0;
    for (int v = 0; v < twon; ++v) {
        if (partner[v] > v) {
            left[c] = v;
            right[c] = partner[v];
            ++c;
        }
    }
}

inline QuadCount classify_chords(const int *left, const int *right, int n, int marked) {
    QuadCount q;
    int i = left[marked], j = right[marked];
    for (int c = 0; c < n; ++c) {
        if (c == marked) continue;
        int a = left[c], b = right[c];
        if (b < i || a > j) ++q.excluded;
        else if (i < a && b < j) ++q.contained;
        else if (a < i && j < b) ++q.containing;
        else ++q.crossing;
    }
    return q;
}

struct Tally {
    explicit Tally(int n)
        : crossing(n, 0), contained(n, 0), containing(n, 0), excluded(n, 0) {}
    std::vector<std::uint64_t> crossing, contained, containing, excluded;
    std::uint64_t visited = 0;
    std::uint64_t violations = 0;

    void merge(const Tally &o) {
        for (std::size_t p = 0; p < crossing.size(); ++p) {
            crossing[p] += o.crossing[p];
            contained[p] += o.contained[p];
            containing[p] += o.containing[p];
            excluded[p] += o.excluded[p];
        }
        visited += o.visited;
        violations += o.violations;
    }
};

void tally_matching(const std::vector<int> &partner, int n, Tally &t) {
    int left[kEnumerationCapLarge], right[kEnumerationCapLarge];
    chord_list(partner, 2 * n, left, right);
    for (int marked = 0; marked < n; ++marked) {
        QuadCount q = classify_chords(left, right, n, marked);
        if (q.crossing + q.contained + q.containing + q.excluded != n - 1) ++t.violations;
        ++t.crossing[q.crossing];
        ++t.contained[q.contained];
        ++t.containing[q.containing];
        ++t.excluded[q.excluded];
        ++t.visited;
    }
}

// Match the lowest unmatched vertex with every later unmatched one.
void enumerate_rec(std::vector<int> &partner, int n, Tally &t) {
    int twon = 2 * n;
    int v = 0;
    while (v < twon && partner[v] >= 0) ++v;
    if (v == twon) {
        tally_matching(partner, n, t);
        return;
    }
    for (int w = v + 1; w < twon; ++w) {
        if (partner[w] >= 0) continue;
        partner[v] = w;
        partner[w] = v;
        enumerate_rec(partner, n, t);
        partner[v] = -1;
        partner[w] = -1;
    }
}

} // namespace

QuadCount classify(const MarkedMatching &m) {
    check_involution(m);
    std::vector<int> left(m.n), right(m.n);
    chord_list(m.partner, 2 * m.n, left.data(), right.data());
    QuadCount q = classify_chords(left.data(), right.data(), m.n, m.marked);
    if (q.crossing + q.contained + q.containing + q.excluded != m.n - 1)
        throw std::logic_error("classify: quadrant counts do not partition the other chords");
    return q;
}

EnumerationResult enumerate_counts(int n, bool allow_large, int threads) {
    require_n(n);
    int cap = allow_large ? kEnumerationCapLarge : kEnumerationCap;
    if (n > cap)
        throw std::invalid_argument("enumeration at n=" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap) +
                                    (allow_large ? "" : " (pass the override to go further)"));
    if (threads < 1) threads = 1;

    // The 2n-1 choices of a partner for vertex 0 split the tree into
    // independent subtrees; tallies merge by addition.
    int twon = 2 * n;
    std::vector<Tally> partial(threads, Tally(n));
    auto worker = [&](int tid) {
        std::vector<int> partner(twon, -1);
        for (int w = 1 + tid; w < twon; w += threads) {
            partner[0] = w;
            partner[w] = 0;
            enumerate_rec(partner, n, partial[tid]);
            partner[0] = -1;
            partner[w] = -1;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto &th : pool) th.join();
    }
    for (int tid = 1; tid < threads; ++tid) partial[0].merge(partial[tid]);
    const Tally &t = partial[0];

    EnumerationResult out{{CountTable{StatKind::Crossing, n, {}},
                           CountTable{StatKind::Contained, n, {}},
                           CountTable{StatKind::Containing, n, {}},
                           CountTable{StatKind::Excluded, n, {}}},
                          Int(0),
                          t.violations};
    auto fill = [&](CountTable &table, const std::vector<std::uint64_t> &src) {
        table.counts.reserve(n);
        for (int p = 0; p < n; ++p) table.counts.emplace_back(static_cast<unsigned long>(src[p]));
    };
    fill(out.tables[0], t.crossing);
    fill(out.tables[1], t.contained);
    fill(out.tables[2], t.containing);
    fill(out.tables[3], t.excluded);
    out.configurations = Int(static_cast<unsigned long>(t.visited));
    return out;
}

MarkedMatching sample_uniform(int n, std::uint64_t seed) {
    require_n(n);
    SplitMix64 rng(seed);
    MarkedMatching m{n, std::vector<int>(2 * n, -1), 0};
    std::vector<int> free;
    free.reserve(2 * n);
    for (int v = 0; v < 2 * n; ++v) free.push_back(v);
    // Pair the lowest unmatched vertex with a uniform other unmatched one:
    // each of the (2n-1)!! matchings comes out equally likely.
    while (!free.empty()) {
        int v = free.front();
        std::size_t pick = 1 + static_cast<std::size_t>(rng.next_below(free.size() - 1));
        int w = free[pick];
        m.partner[v] = w;
        m.partner[w] = v;
        free.erase(free.begin() + pick);
        free.erase(free.begin());
    }
    m.marked = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    return m;
}

MonteCarloResult monte_carlo(int n, std::uint64_t reps, std::uint64_t seed) {
    require_n(n);
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    MonteCarloResult out;
    out.n = n;
    out.reps = reps;
    out.seed = seed;
    std::array<std::vector<std::uint64_t>, 4> counts;
    counts.fill(std::vector<std::uint64_t>(n, 0));

    std::uint64_t draw_seed = SplitMix64::stream_seed(seed, 0);
    SplitMix64 rng(draw_seed);
    std::vector<int> partner(2 * n), free_init(2 * n), free;
    std::vector<int> left(n), right(n);
    for (int v = 0; v < 2 * n; ++v) free_init[v] = v;
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
        free = free_init;
        while (!free.empty()) {
            int v = free.front();
            std::size_t pick = 1 + static_cast<std::size_t>(rng.next_below(free.size() - 1));
            int w = free[pick];
            partner[v] = w;
            partner[w] = v;
            free.erase(free.begin() + pick);
            free.erase(free.begin());
        }
        int marked = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        chord_list(partner, 2 * n, left.data(), right.data());
        QuadCount q = classify_chords(left.data(), right.data(), n, marked);
        ++counts[0][q.crossing];
        ++counts[1][q.contained];
        ++counts[2][q.containing];
        ++counts[3][q.excluded];
    }

    for (int s = 0; s < 4; ++s) {
        EmpiricalDistribution &dist = out.distributions[s];
        dist.stat = kAllStats[s];
        dist.counts = counts[s];
        dist.frequency.resize(n);
        dist.std_error.resize(n);
        double total = static_cast<double>(reps);
        double mean = 0.0;
        for (int p = 0; p < n; ++p) {
            double f = static_cast<double>(counts[s][p]) / total;
            dist.frequency[p] = f;
            dist.std_error[p] = std::sqrt(f * (1.0 - f) / total);
            mean += p * f;
        }
        dist.mean = mean;
    }
    return out;
}

double chi_square(const std::vector<std::uint64_t> &counts,
                  const std::vector<Rat> &exact_probs, std::uint64_t reps) {
    if (counts.size() != exact_probs.size())
        throw std::invalid_argument("chi_square: size mismatch");
    double stat = 0.0;
    for (std::size_t p = 0; p < counts.size(); ++p) {
        double expected = to_double(exact_probs[p]) * static_cast<double>(reps);
        if (expected <= 0.0) continue;
        double diff = static_cast<double>(counts[p]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

} // namespace chordstats::oracle

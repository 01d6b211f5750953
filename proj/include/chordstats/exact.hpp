#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "chordstats/arith.hpp"

namespace chordstats {

// The four relative positions another chord can take with respect to the
// marked chord. Enumerator order defines the stable output order K, C, G, X.
enum class StatKind { Crossing, Contained, Containing, Excluded };

inline constexpr std::array<StatKind, 4> kAllStats = {
    StatKind::Crossing, StatKind::Contained, StatKind::Containing, StatKind::Excluded};

char stat_symbol(StatKind s);             // 'K', 'C', 'G', 'X'
const char *stat_name(StatKind s);        // "crossing", ...
StatKind stat_from_symbol(std::string_view text);  // accepts "K" or "crossing" etc.

// Row of exact counts for one statistic: counts[p] configurations in which
// exactly p of the other n-1 chords stand in the given relation.
struct CountTable {
    StatKind stat;
    int n = 0;
    std::vector<Int> counts;  // size n, indexed by p
};

// Law of the marked chord's size d (vertices strictly between its
// endpoints): probs[d] = (1/n)(1 - d/(2n-1)) for d = 0..2n-2.
struct SizeDistribution {
    int n = 0;
    std::vector<Rat> probs;
    Rat mean() const;      // by direct summation
    Rat variance() const;  // by direct summation
};

namespace exact {

// Memoized; safe for concurrent use.
Int factorial(long k);
Int double_factorial(long k);  // k >= -1, with (-1)!! = 0!! = 1
Int binomial(long n, long k);  // 0 outside 0 <= k <= n

// n * (2n-1)!!, the number of diagrams with one marked chord.
Int total_configurations(int n);

SizeDistribution size_distribution(int n);

// Configurations where the marked chord has size d and is crossed exactly
// p times. Zero (not an error) for out-of-range or parity-violating (p, d).
Int count_crossings_by_size(int n, int p, int d);

// Exact count for one (stat, n, p) cell.
Int count_stat(StatKind stat, int n, int p);
CountTable count_row(StatKind stat, int n);

enum class AtLeastMethod { DirectSum, ClosedForm };

// "At least q containing chords" and "at least q left / r right excluded
// chords". The two methods are independent routes and must agree exactly.
Int at_least_containing(int n, int q, AtLeastMethod method = AtLeastMethod::ClosedForm);
Int at_least_excluded(int n, int q, int r, AtLeastMethod method = AtLeastMethod::ClosedForm);
Int at_least_count(StatKind stat, int n, int q, int r = 0,
                   AtLeastMethod method = AtLeastMethod::ClosedForm);

// Crossing-count rows 1..n from the row recursion
//   K(n,p) = n*K(n-1,p) + n*K(n-1,p-1),
// seeded with the p = 0 column base_column[m-1] = K(m,0), m = 1..n.
CountTable k_recursion_row(int n, const std::vector<Int> &base_column);
std::vector<CountTable> k_recursion_table(int n_max, const std::vector<Int> &base_column);

} // namespace exact
} // namespace chordstats

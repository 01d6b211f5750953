#include "chordstats/exact.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace chordstats {

char stat_symbol(StatKind s) {
    switch (s) {
    case StatKind::Crossing: return 'K';
    case StatKind::Contained: return 'C';
    case StatKind::Containing: return 'G';
    case StatKind::Excluded: return 'X';
    }
    throw std::logic_error("stat_symbol: bad StatKind");
}

const char *stat_name(StatKind s) {
    switch (s) {
    case StatKind::Crossing: return "crossing";
    case StatKind::Contained: return "contained";
    case StatKind::Containing: return "containing";
    case StatKind::Excluded: return "excluded";
    }
    throw std::logic_error("stat_name: bad StatKind");
}

StatKind stat_from_symbol(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
        case 'K': case 'k': return StatKind::Crossing;
        case 'C': case 'c': return StatKind::Contained;
        case 'G': case 'g': return StatKind::Containing;
        case 'X': case 'x': return StatKind::Excluded;
        }
    }
    for (StatKind s : kAllStats)
        if (text == stat_name(s)) return s;
    throw std::invalid_argument("unknown statistic '" + std::string(text) +
                                "' (expected K, C, G or X)");
}

Rat SizeDistribution::mean() const {
    Rat m(0);
    for (std::size_t d = 0; d < probs.size(); ++d) m += Rat(static_cast<long>(d)) * probs[d];
    return m;
}

Rat SizeDistribution::variance() const {
    Rat m = mean(), m2(0);
    for (std::size_t d = 0; d < probs.size(); ++d)
        m2 += Rat(static_cast<long>(d * d)) * probs[d];
    return m2 - m * m;
}

namespace exact {
namespace {

// Shared memoized tables. Growth is serialized; values are returned by
// value so readers never hold references into a vector that may move.
class FactorialTables {
public:
    Int factorial(long k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(fact_.size()) <= k)
            fact_.push_back(fact_.back() * static_cast<long>(fact_.size()));
        return fact_[static_cast<std::size_t>(k)];
    }

    // dfact_[i] holds (i-1)!!, so the table starts at (-1)!! = 1.
    Int double_factorial(long k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(dfact_.size()) <= k + 1) {
            std::size_t i = dfact_.size();
            dfact_.push_back(i < 2 ? Int(1) : Int(dfact_[i - 2] * static_cast<long>(i - 1)));
        }
        return dfact_[static_cast<std::size_t>(k + 1)];
    }

private:
    std::mutex mu_;
    std::vector<Int> fact_{Int(1)};
    std::vector<Int> dfact_;
};

FactorialTables &tables() {
    static FactorialTables t;
    return t;
}

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

void require_p(int n, int p) {
    require_n(n);
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("p must lie in [0, n-1], got p=" + std::to_string(p) +
                                    " for n=" + std::to_string(n));
}

} // namespace

Int factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    return tables().factorial(k);
}

Int double_factorial(long k) {
    if (k < -1) throw std::invalid_argument("double_factorial: argument must be >= -1");
    return tables().double_factorial(k);
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    return exact_div(factorial(n), factorial(k) * factorial(n - k));
}

Int total_configurations(int n) {
    require_n(n);
    return Int(n) * double_factorial(2L * n - 1);
}

SizeDistribution size_distribution(int n) {
    require_n(n);
    SizeDistribution dist;
    dist.n = n;
    dist.probs.reserve(2 * n - 1);
    for (int d = 0; d <= 2 * n - 2; ++d)
        dist.probs.push_back(make_rat(2L * n - 1 - d, static_cast<long>(n) * (2L * n - 1)));
    return dist;
}

Int count_crossings_by_size(int n, int p, int d) {
    require_n(n);
    if (d < 0 || d > 2 * n - 2 || p < 0) return 0;
    if (p > d || p > 2 * n - d - 2 || (d - p) % 2 != 0) return 0;
    // Choose the p crossing partners on each side, match them up, then match
    // the leftover contained and excluded vertices among themselves; the
    // marked chord of size d has 2n-d-1 possible positions.
    return binomial(d, p) * binomial(2L * n - d - 2, p) * factorial(p) *
           double_factorial(d - p - 1L) * double_factorial(2L * n - d - p - 3) *
           Int(2L * n - d - 1);
}

namespace {

Int crossing_count(int n, int p) {
    Int total(0);
    for (int d = p; d <= 2 * n - 2 - p; d += 2)
        total += count_crossings_by_size(n, p, d);
    return total;
}

Int contained_count(int n, int p) {
    // A vertex under the marked chord is either part of a crossing or of a
    // contained chord, so summing over crossings k at size d = 2p + k
    // isolates exactly p contained chords.
    Int total(0);
    for (int k = 0; k <= n - p - 1; ++k)
        total += count_crossings_by_size(n, k, 2 * p + k);
    return total;
}

Int containing_at_least_closed(int n, int q) {
    // n (2n-1)!! / (q+1) * C(n-1, q) * 2^q (q!)^2 / (2q+1)!
    Int num = total_configurations(n) * binomial(n - 1L, q) * (Int(1) << q) *
              factorial(q) * factorial(q);
    Int den = Int(q + 1) * factorial(2L * q + 1);
    return exact_div(num, den);
}

Int containing_at_least_direct(int n, int q) {
    Int total(0);
    Int matched = factorial(q) * double_factorial(2L * n - 2 * q - 3);
    for (int d = 0; d <= 2 * n - 2 - 2 * q; ++d)
        for (int l = q; l <= 2 * n - d - 2 - q; ++l)
            total += binomial(l, q) * binomial(2L * n - d - l - 2, q) * matched;
    return total;
}

Int excluded_at_least_closed(int n, int q, int r) {
    // n (2n-1)!! / (q+r+1) * (n-1)! / (q! r! (n-1-q-r)!) * (2q)! (2r)! / (2q+2r+1)!
    Int num = total_configurations(n) * factorial(n - 1L) * factorial(2L * q) * factorial(2L * r);
    Int den = Int(q + r + 1) * factorial(q) * factorial(r) * factorial(n - 1L - q - r) *
              factorial(2L * (q + r) + 1);
    return exact_div(num, den);
}

Int excluded_at_least_direct(int n, int q, int r) {
    Int total(0);
    Int matched = double_factorial(2L * q - 1) * double_factorial(2L * r - 1) *
                  double_factorial(2L * n - 2 * q - 2 * r - 3);
    for (int d = 0; d <= 2 * n - 2 - 2 * q - 2 * r; ++d)
        for (int l = 2 * q; l <= 2 * n - d - 2 - 2 * r; ++l)
            total += binomial(l, 2L * q) * binomial(2L * n - d - l - 2, 2L * r) * matched;
    return total;
}

Int containing_count(int n, int p) {
    // Inclusion-exclusion over the at-least counts.
    Int total(0);
    for (int q = p; q <= n - 1; ++q) {
        Int term = binomial(q, p) * containing_at_least_closed(n, q);
        if ((q - p) % 2 == 0) total += term; else total -= term;
    }
    return total;
}

// Sum of Y(n, q, s-q) over q: "at least s excluded" regardless of side.
Int excluded_at_least_total(int n, int s) {
    Int total(0);
    for (int q = 0; q <= s; ++q)
        total += excluded_at_least_closed(n, q, s - q);
    return total;
}

Int excluded_count(int n, int p) {
    Int total(0);
    for (int s = p; s <= n - 1; ++s) {
        Int term = binomial(s, p) * excluded_at_least_total(n, s);
        if ((s - p) % 2 == 0) total += term; else total -= term;
    }
    return total;
}

} // namespace

Int count_stat(StatKind stat, int n, int p) {
    require_p(n, p);
    switch (stat) {
    case StatKind::Crossing: return crossing_count(n, p);
    case StatKind::Contained: return contained_count(n, p);
    case StatKind::Containing: return containing_count(n, p);
    case StatKind::Excluded: return excluded_count(n, p);
    }
    throw std::logic_error("count_stat: bad StatKind");
}

CountTable count_row(StatKind stat, int n) {
    require_n(n);
    CountTable row{stat, n, {}};
    row.counts.reserve(n);
    if (stat == StatKind::Excluded) {
        // Share the at-least totals across the whole row.
        std::vector<Int> tot(n);
        for (int s = 0; s <= n - 1; ++s) tot[s] = excluded_at_least_total(n, s);
        for (int p = 0; p <= n - 1; ++p) {
            Int v(0);
            for (int s = p; s <= n - 1; ++s) {
                Int term = binomial(s, p) * tot[s];
                if ((s - p) % 2 == 0) v += term; else v -= term;
            }
            row.counts.push_back(std::move(v));
        }
    } else {
        for (int p = 0; p <= n - 1; ++p) row.counts.push_back(count_stat(stat, n, p));
    }
    return row;
}

Int at_least_containing(int n, int q, AtLeastMethod method) {
    require_n(n);
    if (q < 0 || q > n - 1)
        throw std::invalid_argument("at_least_containing: q out of range");
    return method == AtLeastMethod::ClosedForm ? containing_at_least_closed(n, q)
                                               : containing_at_least_direct(n, q);
}

Int at_least_excluded(int n, int q, int r, AtLeastMethod method) {
    require_n(n);
    if (q < 0 || r < 0 || q + r > n - 1)
        throw std::invalid_argument("at_least_excluded: (q, r) out of range");
    return method == AtLeastMethod::ClosedForm ? excluded_at_least_closed(n, q, r)
                                               : excluded_at_least_direct(n, q, r);
}

Int at_least_count(StatKind stat, int n, int q, int r, AtLeastMethod method) {
    switch (stat) {
    case StatKind::Containing: return at_least_containing(n, q, method);
    case StatKind::Excluded: return at_least_excluded(n, q, r, method);
    default:
        throw std::invalid_argument("at_least_count is defined for containing and excluded only");
    }
}

std::vector<CountTable> k_recursion_table(int n_max, const std::vector<Int> &base_column) {
    require_n(n_max);
    if (static_cast<int>(base_column.size()) < n_max)
        throw std::invalid_argument("k_recursion_table: base column has " +
                                    std::to_string(base_column.size()) + " entries, need " +
                                    std::to_string(n_max));
    std::vector<CountTable> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        CountTable row{StatKind::Crossing, n, std::vector<Int>(n)};
        row.counts[0] = base_column[n - 1];
        if (n > 1) {
            const std::vector<Int> &prev = rows.back().counts;
            for (int p = 1; p <= n - 1; ++p) {
                Int v = prev[p - 1];
                if (p < n - 1) v += prev[p];
                row.counts[p] = Int(n) * v;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CountTable k_recursion_row(int n, const std::vector<Int> &base_column) {
    return k_recursion_table(n, base_column).back();
}

} // namespace exact
} // namespace chordstats

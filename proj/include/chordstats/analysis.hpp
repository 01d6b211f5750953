#pragma once

#include <memory>
#include <vector>

#include "chordstats/arith.hpp"
#include "chordstats/exact.hpp"

namespace chordstats::analysis {

// Exact law of a statistic at finite n: probs[p] = count / (n (2n-1)!!).
struct ExactDistribution {
    StatKind stat;
    int n = 0;
    std::vector<Rat> probs;
};

ExactDistribution exact_distribution(StatKind stat, int n);

// Process-wide cache of distribution rows; a full row at n = 100 costs
// O(n^2) big-integer terms per entry and is reused across grid points.
std::shared_ptr<const std::vector<Rat>> cached_probs(StatKind stat, int n);

// Closed-form m-th factorial moment E[P(P-1)...(P-m+1)] of the exact law.
Rat factorial_moment(StatKind stat, int n, int m);

// The same moment by direct summation over the distribution; an
// independent route used to validate the closed forms.
Rat factorial_moment_direct(const ExactDistribution &dist, int m);

// Exact moment of the asymptotic excluded-pair density:
// I_m = 2^-m * sum_k C(m,k)/(2k+1).
Rat excluded_moment(int m);

struct MomentReport {
    StatKind stat;
    int n = 0;
    int m = 0;
    Rat factorial_moment;  // order-m factorial moment
    Rat mean;
    Rat variance;
};

MomentReport moment_report(StatKind stat, int n, int m);
MomentReport mean_variance(StatKind stat, int n);  // moment_report at m = 1

// Scaled limit densities on x in [0, 1]. The contained and containing
// densities diverge as x -> 0; evaluation there returns +infinity rather
// than a large float. At the critical point x = 1/2 the conventions are:
// crossing evaluates to 0, containing to 0 (its branch boundary is taken as
// 0 < x <= 1/2), excluded to pi/2 (both branches agree, the density is
// continuous there). These single-point choices do not affect any integral.
double asymptotic_density(StatKind stat, double x);
double asymptotic_cdf(StatKind stat, double x);

// Finite-n Normal-approximation integral interpolating the discrete scaled
// law; defined for the crossing and contained statistics. Adaptive
// quadrature to the given absolute tolerance; throws std::runtime_error
// (with the achieved estimate) when the tolerance is not reached.
double normal_approx_density(StatKind stat, int n, double x, double abs_tol = 1e-9);

// Moment identities tying the containing/excluded densities to the
// crossing density dressed by 1/(m+1); verified by quadrature. Throws
// std::logic_error when an identity is violated beyond the tolerance.
struct IbpMomentReport {
    int m = 0;
    double tolerance = 0.0;
    double containing_moment = 0.0;  // integral of x^m * containing density
    double crossing_moment = 0.0;    // integral of x^m * crossing density
    double containing_expected = 0.0;  // m! / ((m+1)(2m+1)!!)
    double excluded_moment_value = 0.0;  // integral of x^m * excluded density
    double excluded_expected = 0.0;      // I_m / (m+1)
};

IbpMomentReport ibp_moment_identity_check(int m, double tolerance = 1e-8);

// One record per grid point: the exact scaled probability at the nearest
// representable p against the density at p/(n-1).
struct ConvergenceRow {
    double x = 0.0;
    int p = 0;
    double exact_scaled = 0.0;
    double asymptotic = 0.0;
    double abs_error = 0.0;
};

std::vector<ConvergenceRow> convergence_table(StatKind stat, int n,
                                              const std::vector<double> &grid);

} // namespace chordstats::analysis

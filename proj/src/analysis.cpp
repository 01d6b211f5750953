#include "chordstats/analysis.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "chordstats/quadrature.hpp"

namespace chordstats::analysis {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

void require_x(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("x must lie in [0, 1], got " + std::to_string(x));
}

} // namespace

ExactDistribution exact_distribution(StatKind stat, int n) {
    require_n(n);
    CountTable row = exact::count_row(stat, n);
    Int total = exact::total_configurations(n);
    ExactDistribution dist{stat, n, {}};
    dist.probs.reserve(n);
    for (const Int &c : row.counts) dist.probs.push_back(make_rat(c, total));
    return dist;
}

std::shared_ptr<const std::vector<Rat>> cached_probs(StatKind stat, int n) {
    static std::mutex mu;
    static std::map<std::pair<StatKind, int>, std::shared_ptr<const std::vector<Rat>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({stat, n});
        if (it != cache.end()) return it->second;
    }
    auto row = std::make_shared<const std::vector<Rat>>(exact_distribution(stat, n).probs);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({stat, n}, std::move(row)).first->second;
}

Rat excluded_moment(int m) {
    if (m < 0) throw std::invalid_argument("moment order must be >= 0");
    Rat sum(0);
    for (int k = 0; k <= m; ++k)
        sum += make_rat(exact::binomial(m, k), Int(2 * k + 1));
    return sum / Rat(Int(1) << m);
}

Rat factorial_moment(StatKind stat, int n, int m) {
    require_n(n);
    if (m < 0 || m > n - 1)
        throw std::invalid_argument("moment order m must lie in [0, n-1]");
    // Common falling-factorial prefactor (n-1)! / (n-m-1)!.
    Rat falling(exact_div(exact::factorial(n - 1), exact::factorial(n - 1 - m)));
    switch (stat) {
    case StatKind::Crossing:
        return falling * make_rat(exact::factorial(m), exact::double_factorial(2L * m + 1));
    case StatKind::Contained:
        return falling * make_rat(1, static_cast<long>(m + 1) * (2L * m + 1));
    case StatKind::Containing:
        return falling * make_rat(exact::factorial(m),
                                  Int(m + 1) * exact::double_factorial(2L * m + 1));
    case StatKind::Excluded:
        return falling * excluded_moment(m) / Rat(m + 1);
    }
    throw std::logic_error("factorial_moment: bad StatKind");
}

Rat factorial_moment_direct(const ExactDistribution &dist, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be >= 0");
    Rat total(0);
    for (int p = m; p < dist.n; ++p) {
        Int falling = exact_div(exact::factorial(p), exact::factorial(p - m));
        total += Rat(falling) * dist.probs[p];
    }
    return total;
}

MomentReport moment_report(StatKind stat, int n, int m) {
    MomentReport report{stat, n, m, factorial_moment(stat, n, m), Rat(0), Rat(0)};
    report.mean = n >= 2 ? factorial_moment(stat, n, 1) : Rat(0);
    Rat second = n >= 3 ? factorial_moment(stat, n, 2) : Rat(0);
    report.variance = second + report.mean - report.mean * report.mean;
    return report;
}

MomentReport mean_variance(StatKind stat, int n) { return moment_report(stat, n, n >= 2 ? 1 : 0); }

double asymptotic_density(StatKind stat, double x) {
    require_x(x);
    switch (stat) {
    case StatKind::Crossing:
        return x < 0.5 ? 1.0 / std::sqrt(1.0 - 2.0 * x) : 0.0;
    case StatKind::Contained:
        return x == 0.0 ? kInf : 1.0 / std::sqrt(x) - 1.0;
    case StatKind::Containing:
        if (x == 0.0) return kInf;
        return x <= 0.5 ? 2.0 * std::atanh(std::sqrt(1.0 - 2.0 * x)) : 0.0;
    case StatKind::Excluded:
        return x < 0.5 ? kPi / 2.0 : kPi / 2.0 - 2.0 * std::atan(std::sqrt(2.0 * x - 1.0));
    }
    throw std::logic_error("asymptotic_density: bad StatKind");
}

double asymptotic_cdf(StatKind stat, double x) {
    require_x(x);
    switch (stat) {
    case StatKind::Crossing:
        return x < 0.5 ? 1.0 - std::sqrt(1.0 - 2.0 * x) : 1.0;
    case StatKind::Contained:
        return 2.0 * std::sqrt(x) - x;
    case StatKind::Containing: {
        if (x >= 0.5) return 1.0;
        // antiderivative of 2 atanh(sqrt(1-2t)): 1 - u + 2x atanh(u), u = sqrt(1-2x)
        double u = std::sqrt(1.0 - 2.0 * x);
        if (u >= 1.0) return 0.0;  // x below double resolution
        return 1.0 - u + 2.0 * x * std::atanh(u);
    }
    case StatKind::Excluded: {
        if (x <= 0.5) return kPi / 2.0 * x;
        double u = std::sqrt(2.0 * x - 1.0);
        return kPi / 4.0 + kPi / 2.0 * (x - 0.5) - (2.0 * x * std::atan(u) - u);
    }
    }
    throw std::logic_error("asymptotic_cdf: bad StatKind");
}

double normal_approx_density(StatKind stat, int n, double x, double abs_tol) {
    if (n < 2) throw std::invalid_argument("normal_approx_density needs n >= 2");
    require_x(x);
    double nm1 = n - 1;
    QuadratureResult res;
    switch (stat) {
    case StatKind::Crossing: {
        // Integral over Normal approximations of the crossing law, taken in
        // the angle variable; mean sin^2(theta)/2, variance (1-cos^4)/4(n-1).
        auto f = [nm1, x](double theta) {
            double c = std::cos(theta);
            double c2 = c * c;
            double denom = 1.0 - c2 * c2;
            if (denom <= 0.0) return 0.0;
            double s2 = std::sin(theta);
            s2 *= s2;
            double dev = x - 0.5 * s2;
            return std::exp(-2.0 * nm1 * dev * dev / denom) / std::sqrt(1.0 + c2);
        };
        res = integrate(f, 0.0, kPi, abs_tol * std::sqrt(2.0 * kPi / nm1));
        res.value *= std::sqrt(nm1 / (2.0 * kPi));
        res.error *= std::sqrt(nm1 / (2.0 * kPi));
        break;
    }
    case StatKind::Contained: {
        // Normal approximation with mean alpha^2 and variance
        // alpha^2 (1 - alpha^2) / (n-1).
        auto f = [nm1, x](double alpha) {
            double a2 = alpha * alpha;
            double denom = a2 * (1.0 - a2);
            if (denom <= 0.0) return 0.0;
            double dev = x - a2;
            return 2.0 * (1.0 - alpha) / std::sqrt(denom) *
                   std::exp(-nm1 * dev * dev / (2.0 * denom));
        };
        res = integrate(f, 0.0, 1.0, abs_tol * std::sqrt(2.0 * kPi / nm1));
        res.value *= std::sqrt(nm1 / (2.0 * kPi));
        res.error *= std::sqrt(nm1 / (2.0 * kPi));
        break;
    }
    default:
        throw std::invalid_argument(
            "normal_approx_density is defined for the crossing and contained statistics");
    }
    if (!res.converged)
        throw std::runtime_error("normal approximation quadrature did not converge: error estimate " +
                                 std::to_string(res.error));
    return res.value;
}

IbpMomentReport ibp_moment_identity_check(int m, double tolerance) {
    if (m < 0) throw std::invalid_argument("moment order must be >= 0");
    double quad_tol = tolerance / 10.0;
    IbpMomentReport report;
    report.m = m;
    report.tolerance = tolerance;

    auto moment = [m](StatKind stat, double a, double b, double tol) {
        auto f = [stat, m](double x) {
            return std::pow(x, m) * asymptotic_density(stat, x);
        };
        QuadratureResult r = integrate_singular(f, a, b, tol);
        if (!r.converged)
            throw std::runtime_error("moment quadrature did not converge: error estimate " +
                                     std::to_string(r.error));
        return r.value;
    };

    report.crossing_moment = moment(StatKind::Crossing, 0.0, 0.5, quad_tol);
    report.containing_moment = moment(StatKind::Containing, 0.0, 0.5, quad_tol);
    report.excluded_moment_value =
        moment(StatKind::Excluded, 0.0, 0.5, quad_tol / 2) +
        moment(StatKind::Excluded, 0.5, 1.0, quad_tol / 2);

    Rat containing_exact = make_rat(exact::factorial(m),
                                    Int(m + 1) * exact::double_factorial(2L * m + 1));
    report.containing_expected = to_double(containing_exact);
    report.excluded_expected = to_double(excluded_moment(m) / Rat(m + 1));

    double ratio_gap = std::fabs(report.containing_moment - report.crossing_moment / (m + 1));
    double g_gap = std::fabs(report.containing_moment - report.containing_expected);
    double x_gap = std::fabs(report.excluded_moment_value - report.excluded_expected);
    if (ratio_gap > tolerance || g_gap > tolerance || x_gap > tolerance)
        throw std::logic_error("moment identity violated beyond tolerance: gaps " +
                               std::to_string(ratio_gap) + ", " + std::to_string(g_gap) + ", " +
                               std::to_string(x_gap));
    return report;
}

std::vector<ConvergenceRow> convergence_table(StatKind stat, int n,
                                              const std::vector<double> &grid) {
    if (n < 2) throw std::invalid_argument("convergence_table needs n >= 2");
    auto probs = cached_probs(stat, n);
    std::vector<ConvergenceRow> rows;
    rows.reserve(grid.size());
    for (double x : grid) {
        require_x(x);
        ConvergenceRow row;
        row.x = x;
        row.p = static_cast<int>(std::lround(x * (n - 1)));
        row.p = std::min(std::max(row.p, 0), n - 1);
        row.exact_scaled = (n - 1) * to_double((*probs)[row.p]);
        row.asymptotic = asymptotic_density(stat, static_cast<double>(row.p) / (n - 1));
        row.abs_error = std::fabs(row.exact_scaled - row.asymptotic);
        rows.push_back(row);
    }
    return rows;
}

} // namespace chordstats::analysis

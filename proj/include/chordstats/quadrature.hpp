#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace chordstats {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    bool converged = false;
    std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss. All nodes are interior, so
// integrands with endpoint singularities are never evaluated at a, b.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(F &&f, double a, double b, double &value, double &error) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    double resg = kG7Weights[3] * fc;
    double resk = kK15Weights[7] * fc;
    double resabs = kK15Weights[7] * std::fabs(fc);
    double fv[7][2];
    for (int i = 0; i < 7; ++i) {
        double dx = half * kGK15Nodes[i];
        fv[i][0] = f(center - dx);
        fv[i][1] = f(center + dx);
        double sum = fv[i][0] + fv[i][1];
        resk += kK15Weights[i] * sum;
        resabs += kK15Weights[i] * (std::fabs(fv[i][0]) + std::fabs(fv[i][1]));
        if (i % 2 == 1) resg += kG7Weights[i / 2] * sum;
    }
    double mean = resk * 0.5;
    double resasc = kK15Weights[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kK15Weights[i] * (std::fabs(fv[i][0] - mean) + std::fabs(fv[i][1] - mean));
    resasc *= std::fabs(half);
    value = resk * half;
    error = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && error != 0.0)
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    (void)resabs;
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment &o) const { return error < o.error; }
};

} // namespace detail

// Globally adaptive bisection: the segment with the largest error estimate
// splits first, until the summed estimate drops below abs_tol.
template <class F>
QuadratureResult integrate(F &&f, double a, double b, double abs_tol = 1e-9,
                           std::size_t max_intervals = 100000);

// Variant for integrands with algebraic or logarithmic endpoint
// singularities: the substitution x = a + (b-a) sin^2(pi t / 2) flattens
// inverse-square-root blowups at either end into a smooth integrand, and no
// evaluation ever lands on an endpoint.
template <class F>
QuadratureResult integrate_singular(F &&f, double a, double b, double abs_tol = 1e-9,
                                    std::size_t max_intervals = 100000) {
    constexpr double pi = 3.14159265358979323846;
    double width = b - a;
    auto mapped = [&](double t) {
        double s = std::sin(pi * t / 2.0);
        double x = a + width * s * s;
        if (x <= a || x >= b) return 0.0;  // fell on an endpoint in doubles
        return f(x) * width * (pi / 2.0) * std::sin(pi * t);
    };
    return integrate(mapped, 0.0, 1.0, abs_tol, max_intervals);
}

template <class F>
QuadratureResult integrate(F &&f, double a, double b, double abs_tol,
                           std::size_t max_intervals) {
    std::priority_queue<detail::Segment> queue;
    detail::Segment s{a, b, 0.0, 0.0};
    detail::gauss_kronrod_15(f, a, b, s.value, s.error);
    queue.push(s);
    double total_error = s.error;
    std::size_t count = 1;
    while (total_error > abs_tol && count < max_intervals) {
        detail::Segment worst = queue.top();
        queue.pop();
        total_error -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted in doubles
            total_error += worst.error;
            queue.push(worst);
            break;
        }
        for (auto [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            detail::Segment part{lo, hi, 0.0, 0.0};
            detail::gauss_kronrod_15(f, lo, hi, part.value, part.error);
            queue.push(part);
            total_error += part.error;
        }
        ++count;
    }
    QuadratureResult out;
    out.intervals = count;
    out.error = 0.0;
    out.value = 0.0;
    while (!queue.empty()) {
        out.value += queue.top().value;
        out.error += queue.top().error;
        queue.pop();
    }
    out.converged = out.error <= abs_tol;
    return out;
}

} // namespace chordstats

#pragma once

#include <vector>

#include "chordstats/arith.hpp"
#include "chordstats/exact.hpp"

namespace chordstats::series {

// Polynomial in the marker variable y over exact rationals. Canonical form
// carries no trailing zero coefficient, so equality is plain coefficient
// comparison.
class MarkerPolynomial {
public:
    MarkerPolynomial() = default;
    explicit MarkerPolynomial(const Rat &constant);
    static MarkerPolynomial from_coeffs(std::vector<Rat> coeffs);
    static MarkerPolynomial monomial(const Rat &coeff, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int k) const;
    const std::vector<Rat> &coeffs() const { return coeffs_; }
    Rat at_one() const;  // evaluate at y = 1

    MarkerPolynomial operator+(const MarkerPolynomial &o) const;
    MarkerPolynomial operator-(const MarkerPolynomial &o) const;
    MarkerPolynomial operator-() const;
    MarkerPolynomial operator*(const MarkerPolynomial &o) const;
    MarkerPolynomial times(const Rat &scalar) const;
    bool operator==(const MarkerPolynomial &o) const = default;

    // Exact quotient by (1 - y); throws std::logic_error when the remainder
    // p(1) is nonzero, which signals a construction bug upstream.
    MarkerPolynomial divide_by_one_minus_y() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Power series in z truncated at a fixed order (inclusive), coefficients are
// marker polynomials. Operands of binary operations must share the order;
// nothing ever re-truncates silently.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries constant(int order, const Rat &value);

    int order() const { return order_; }
    const MarkerPolynomial &coeff(int n) const;
    void set_coeff(int n, MarkerPolynomial value);

    TruncatedSeries operator+(const TruncatedSeries &o) const;
    TruncatedSeries operator-(const TruncatedSeries &o) const;
    TruncatedSeries operator*(const TruncatedSeries &o) const;
    TruncatedSeries times(const Rat &scalar) const;

    // Copy truncated to a lower order (explicit, never implicit).
    TruncatedSeries truncated(int new_order) const;
    // Multiply by z: coefficients shift up one order, the top one drops off.
    TruncatedSeries times_z() const;
    TruncatedSeries derivative() const;  // order N-1
    TruncatedSeries integral() const;    // order N+1, constant term 0

private:
    void check_same_order(const TruncatedSeries &o) const;
    int order_;
    std::vector<MarkerPolynomial> coeffs_;
};

// Elementary series: coefficient recurrences for 1/s and sqrt(s), and the
// integrated derivative relations log(s)' = s'/s, atan(s)' = s'/(1+s^2).
TruncatedSeries reciprocal(const TruncatedSeries &s);  // s(0) an invertible constant
TruncatedSeries sqrt(const TruncatedSeries &s);        // s(0) = 1
TruncatedSeries log(const TruncatedSeries &s);         // s(0) = 1
TruncatedSeries atan(const TruncatedSeries &s);        // s(0) = 0

// Coefficient-wise exact division by (1 - y).
TruncatedSeries divide_by_one_minus_y(const TruncatedSeries &s);

// The bivariate exponential generating function of a statistic, truncated at
// z^order. The coefficient of y^p z^n, times n!, is the exact count.
TruncatedSeries build_gf(StatKind stat, int order);

// n! * [y^p z^n] of a built generating function; integrality is asserted.
Int gf_coefficient(const TruncatedSeries &gf, int n, int p);
Int gf_coefficient(StatKind stat, int n, int p, int order);

} // namespace chordstats::series

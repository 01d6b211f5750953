#include <doctest.h>

#include "chordstats/exact.hpp"
#include "chordstats/series.hpp"

using namespace chordstats;
using series::MarkerPolynomial;
using series::TruncatedSeries;

namespace {

TruncatedSeries one_minus_2z(int order) {
    TruncatedSeries s = TruncatedSeries::constant(order, Rat(1));
    s.set_coeff(1, MarkerPolynomial(Rat(-2)));
    return s;
}

TruncatedSeries one_minus_2yz(int order) {
    TruncatedSeries s = TruncatedSeries::constant(order, Rat(1));
    s.set_coeff(1, MarkerPolynomial::monomial(Rat(-2), 1));
    return s;
}

TruncatedSeries one_minus_z_one_plus_y(int order) {
    TruncatedSeries s = TruncatedSeries::constant(order, Rat(1));
    s.set_coeff(1, MarkerPolynomial::from_coeffs({Rat(-1), Rat(-1)}));
    return s;
}

} // namespace

TEST_CASE("marker polynomial basics") {
    MarkerPolynomial p = MarkerPolynomial::from_coeffs({Rat(1), Rat(0), Rat(-1)});
    CHECK(p.degree() == 2);
    CHECK(p.at_one() == 0);
    CHECK(p.divide_by_one_minus_y() == MarkerPolynomial::from_coeffs({Rat(1), Rat(1)}));

    MarkerPolynomial q = MarkerPolynomial::from_coeffs({Rat(1), Rat(-1)});
    CHECK(q.divide_by_one_minus_y() == MarkerPolynomial(Rat(1)));

    // trailing zeros trim to canonical form
    CHECK(MarkerPolynomial::from_coeffs({Rat(1), Rat(0)}).degree() == 0);
    CHECK(MarkerPolynomial::from_coeffs({Rat(0)}).is_zero());

    CHECK_THROWS_AS(MarkerPolynomial::from_coeffs({Rat(1), Rat(1)}).divide_by_one_minus_y(),
                    std::logic_error);
}

TEST_CASE("series arithmetic identities") {
    int order = 12;
    TruncatedSeries a = one_minus_2z(order);
    TruncatedSeries product = a * series::reciprocal(a);
    CHECK(product.coeff(0) == MarkerPolynomial(Rat(1)));
    for (int n = 1; n <= order; ++n) CHECK(product.coeff(n).is_zero());

    // z / sqrt(1-2z) has z^2 coefficient (2*1-1)!!/1! = 1
    TruncatedSeries shifted = series::reciprocal(series::sqrt(one_minus_2z(order))).times_z();
    CHECK(shifted.coeff(2) == MarkerPolynomial(Rat(1)));

    TruncatedSeries scaled = one_minus_z_one_plus_y(order).times(Rat(-1));
    CHECK(scaled.coeff(0) == MarkerPolynomial(Rat(-1)));
    CHECK(scaled.coeff(1) == MarkerPolynomial::from_coeffs({Rat(1), Rat(1)}));

    TruncatedSeries other(order + 1);
    CHECK_THROWS_AS((void)(a + other), std::invalid_argument);
}

TEST_CASE("sqrt expansion of 1-2z") {
    TruncatedSeries root = series::sqrt(one_minus_2z(8));
    CHECK(root.coeff(0) == MarkerPolynomial(Rat(1)));
    CHECK(root.coeff(1) == MarkerPolynomial(Rat(-1)));
    CHECK(root.coeff(2) == MarkerPolynomial(make_rat(-1, 2)));
    CHECK(root.coeff(3) == MarkerPolynomial(make_rat(-1, 2)));
    CHECK(root.coeff(4) == MarkerPolynomial(make_rat(-5, 8)));

    // squaring recovers the radicand at every retained order, also for the
    // bivariate radicand at full working order
    TruncatedSeries squared = root * root;
    TruncatedSeries expected = one_minus_2z(8);
    for (int n = 0; n <= 8; ++n) CHECK(squared.coeff(n) == expected.coeff(n));

    TruncatedSeries radicand = one_minus_2z(40) * one_minus_2yz(40);
    TruncatedSeries resquared = series::sqrt(radicand) * series::sqrt(radicand);
    for (int n = 0; n <= 40; ++n) CHECK(resquared.coeff(n) == radicand.coeff(n));

    CHECK_THROWS_AS(series::sqrt(one_minus_2z(8).times(Rat(2))), std::invalid_argument);
}

TEST_CASE("log and atan expansions") {
    int order = 9;
    TruncatedSeries inv = series::reciprocal(one_minus_2z(order));
    TruncatedSeries lg = series::log(inv);
    for (int k = 1; k <= order; ++k)
        CHECK(lg.coeff(k) == MarkerPolynomial(make_rat(Int(1) << k, Int(k))));

    TruncatedSeries z(order);
    z.set_coeff(1, MarkerPolynomial(Rat(1)));
    TruncatedSeries at = series::atan(z);
    CHECK(at.coeff(1) == MarkerPolynomial(Rat(1)));
    CHECK(at.coeff(2).is_zero());
    CHECK(at.coeff(3) == MarkerPolynomial(make_rat(-1, 3)));
    CHECK(at.coeff(5) == MarkerPolynomial(make_rat(1, 5)));

    CHECK_THROWS_AS(series::log(z), std::invalid_argument);
    CHECK_THROWS_AS(series::atan(inv), std::invalid_argument);
}

TEST_CASE("log of a quotient splits") {
    int order = 40;
    TruncatedSeries a = one_minus_z_one_plus_y(order);
    TruncatedSeries b = one_minus_2z(order);
    TruncatedSeries quotient_log = series::log(a * series::reciprocal(b));
    TruncatedSeries split = series::log(a) - series::log(b);
    for (int n = 0; n <= order; ++n) CHECK(quotient_log.coeff(n) == split.coeff(n));
}

TEST_CASE("atan derivative relation") {
    int order = 40;
    TruncatedSeries root = series::sqrt(one_minus_2z(order) * one_minus_2yz(order));
    TruncatedSeries lin(order);
    lin.set_coeff(1, MarkerPolynomial::from_coeffs({Rat(1), Rat(-1)}));
    TruncatedSeries w = lin * series::reciprocal(root);

    TruncatedSeries lhs = series::atan(w).derivative() *
                          (TruncatedSeries::constant(order - 1, Rat(1)) +
                           (w * w).truncated(order - 1));
    TruncatedSeries rhs = w.derivative();
    for (int n = 0; n <= order - 1; ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
}

TEST_CASE("coefficient-wise division by 1-y") {
    // z^2 coefficient of sqrt(1-2yz) - sqrt(1-2z) is -y^2/2 + 1/2
    int order = 4;
    TruncatedSeries num = series::sqrt(one_minus_2yz(order)) - series::sqrt(one_minus_2z(order));
    CHECK(num.coeff(2) ==
          MarkerPolynomial::from_coeffs({make_rat(1, 2), Rat(0), make_rat(-1, 2)}));
    TruncatedSeries divided = series::divide_by_one_minus_y(num);
    CHECK(divided.coeff(2) == MarkerPolynomial::from_coeffs({make_rat(1, 2), make_rat(1, 2)}));
}

TEST_CASE("generating function coefficients reproduce the tables") {
    TruncatedSeries k = series::build_gf(StatKind::Crossing, 6);
    CHECK(k.coeff(2) == MarkerPolynomial::from_coeffs({Rat(2), Rat(1)}));

    TruncatedSeries g = series::build_gf(StatKind::Containing, 6);
    CHECK(g.coeff(3) == MarkerPolynomial::from_coeffs(
                            {make_rat(32, 6), make_rat(11, 6), make_rat(2, 6)}));

    TruncatedSeries x = series::build_gf(StatKind::Excluded, 6);
    CHECK(x.coeff(1) == MarkerPolynomial(Rat(1)));

    CHECK(series::gf_coefficient(StatKind::Contained, 4, 3, 6) == 15);
    CHECK(series::gf_coefficient(x, 6, 5) == 2190);
    CHECK(series::gf_coefficient(StatKind::Crossing, 5, 0, 6) == 1245);

    CHECK_THROWS_AS(series::gf_coefficient(x, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(series::gf_coefficient(x, 3, 3), std::invalid_argument);
}

TEST_CASE("crossing function at y = 0 gives the no-crossing column") {
    TruncatedSeries k = series::build_gf(StatKind::Crossing, 6);
    std::vector<long> expected = {1, 4, 21, 144, 1245, 13140};
    for (int n = 1; n <= 6; ++n)
        CHECK(series::gf_coefficient(k, n, 0) == expected[n - 1]);
}

TEST_CASE("series route equals closed-form sums for small n") {
    int order = 12;
    for (StatKind stat : kAllStats) {
        TruncatedSeries gf = series::build_gf(stat, order);
        for (int n = 1; n <= order; ++n)
            for (int p = 0; p < n; ++p) {
                CAPTURE(stat_symbol(stat));
                CAPTURE(n);
                CAPTURE(p);
                CHECK(series::gf_coefficient(gf, n, p) == exact::count_stat(stat, n, p));
            }
    }
}

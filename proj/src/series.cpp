#include "chordstats/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace chordstats::series {

MarkerPolynomial::MarkerPolynomial(const Rat &constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

MarkerPolynomial MarkerPolynomial::from_coeffs(std::vector<Rat> coeffs) {
    MarkerPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

MarkerPolynomial MarkerPolynomial::monomial(const Rat &coeff, int power) {
    MarkerPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = coeff;
    }
    return p;
}

void MarkerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat MarkerPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[k];
}

Rat MarkerPolynomial::at_one() const {
    Rat total(0);
    for (const Rat &c : coeffs_) total += c;
    return total;
}

MarkerPolynomial MarkerPolynomial::operator+(const MarkerPolynomial &o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return from_coeffs(std::move(out));
}

MarkerPolynomial MarkerPolynomial::operator-(const MarkerPolynomial &o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return from_coeffs(std::move(out));
}

MarkerPolynomial MarkerPolynomial::operator-() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const Rat &c : coeffs_) out.push_back(-c);
    return from_coeffs(std::move(out));
}

MarkerPolynomial MarkerPolynomial::operator*(const MarkerPolynomial &o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

MarkerPolynomial MarkerPolynomial::times(const Rat &scalar) const {
    if (scalar == 0) return {};
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const Rat &c : coeffs_) out.push_back(c * scalar);
    return from_coeffs(std::move(out));
}

MarkerPolynomial MarkerPolynomial::divide_by_one_minus_y() const {
    // p(y) = (1-y) q(y) + p(1): the quotient coefficients are the partial
    // sums q_k = p_0 + ... + p_k.
    Rat remainder = at_one();
    if (remainder != 0)
        throw std::logic_error("divide_by_one_minus_y: nonzero remainder " + remainder.get_str());
    if (is_zero()) return {};
    std::vector<Rat> out(coeffs_.size() - 1, Rat(0));
    Rat run(0);
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        run += coeffs_[k];
        out[k] = run;
    }
    return from_coeffs(std::move(out));
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rat &value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = MarkerPolynomial(value);
    return s;
}

const MarkerPolynomial &TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::invalid_argument("series coefficient " + std::to_string(n) +
                                    " outside truncation order " + std::to_string(order_));
    return coeffs_[n];
}

void TruncatedSeries::set_coeff(int n, MarkerPolynomial value) {
    if (n < 0 || n > order_)
        throw std::invalid_argument("series coefficient " + std::to_string(n) +
                                    " outside truncation order " + std::to_string(order_));
    coeffs_[n] = std::move(value);
}

void TruncatedSeries::check_same_order(const TruncatedSeries &o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("series order mismatch: " + std::to_string(order_) +
                                    " vs " + std::to_string(o.order_));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &o) const {
    check_same_order(o);
    TruncatedSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &o) const {
    check_same_order(o);
    TruncatedSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &o) const {
    check_same_order(o);
    TruncatedSeries out(order_);
    for (int n = 0; n <= order_; ++n) {
        MarkerPolynomial acc;
        for (int k = 0; k <= n; ++k) {
            if (coeffs_[k].is_zero() || o.coeffs_[n - k].is_zero()) continue;
            acc = acc + coeffs_[k] * o.coeffs_[n - k];
        }
        out.coeffs_[n] = std::move(acc);
    }
    return out;
}

TruncatedSeries TruncatedSeries::times(const Rat &scalar) const {
    TruncatedSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n].times(scalar);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("truncated: cannot extend order");
    TruncatedSeries out(new_order);
    for (int n = 0; n <= new_order; ++n) out.coeffs_[n] = coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::times_z() const {
    TruncatedSeries out(order_);
    for (int n = order_; n >= 1; --n) out.coeffs_[n] = coeffs_[n - 1];
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order_ == 0) throw std::invalid_argument("derivative of an order-0 series");
    TruncatedSeries out(order_ - 1);
    for (int n = 1; n <= order_; ++n) out.coeffs_[n - 1] = coeffs_[n].times(Rat(n));
    return out;
}

TruncatedSeries TruncatedSeries::integral() const {
    TruncatedSeries out(order_ + 1);
    for (int n = 0; n <= order_; ++n)
        out.coeffs_[n + 1] = coeffs_[n].times(make_rat(1, n + 1));
    return out;
}

namespace {

const MarkerPolynomial &require_unit_constant(const TruncatedSeries &s, const char *op) {
    const MarkerPolynomial &c0 = s.coeff(0);
    if (c0.degree() != 0 || c0.coeff(0) != 1)
        throw std::invalid_argument(std::string(op) + ": constant term must be 1, got " +
                                    (c0.is_zero() ? std::string("0") : c0.coeff(0).get_str()));
    return c0;
}

} // namespace

TruncatedSeries reciprocal(const TruncatedSeries &s) {
    const MarkerPolynomial &c0 = s.coeff(0);
    if (c0.degree() != 0 || c0.coeff(0) == 0)
        throw std::invalid_argument("reciprocal: constant term must be an invertible constant, got " +
                                    (c0.is_zero() ? std::string("0") : c0.coeff(0).get_str()));
    Rat inv0 = make_rat(1, 1) / c0.coeff(0);
    TruncatedSeries out(s.order());
    out.set_coeff(0, MarkerPolynomial(inv0));
    for (int n = 1; n <= s.order(); ++n) {
        MarkerPolynomial acc;
        for (int k = 1; k <= n; ++k) {
            if (s.coeff(k).is_zero() || out.coeff(n - k).is_zero()) continue;
            acc = acc + s.coeff(k) * out.coeff(n - k);
        }
        out.set_coeff(n, acc.times(-inv0));
    }
    return out;
}

TruncatedSeries sqrt(const TruncatedSeries &s) {
    require_unit_constant(s, "sqrt");
    TruncatedSeries out(s.order());
    out.set_coeff(0, MarkerPolynomial(Rat(1)));
    Rat half = make_rat(1, 2);
    for (int n = 1; n <= s.order(); ++n) {
        MarkerPolynomial acc = s.coeff(n);
        for (int k = 1; k <= n - 1; ++k) {
            if (out.coeff(k).is_zero() || out.coeff(n - k).is_zero()) continue;
            acc = acc - out.coeff(k) * out.coeff(n - k);
        }
        out.set_coeff(n, acc.times(half));
    }
    return out;
}

TruncatedSeries log(const TruncatedSeries &s) {
    require_unit_constant(s, "log");
    if (s.order() == 0) return TruncatedSeries(0);
    TruncatedSeries ratio = s.derivative() * reciprocal(s).truncated(s.order() - 1);
    return ratio.integral();
}

TruncatedSeries atan(const TruncatedSeries &s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("atan: constant term must be 0, got " +
                                    s.coeff(0).coeff(0).get_str());
    if (s.order() == 0) return TruncatedSeries(0);
    int m = s.order() - 1;
    TruncatedSeries one_plus_sq = TruncatedSeries::constant(m, Rat(1)) +
                                  (s * s).truncated(m);
    TruncatedSeries ratio = s.derivative() * reciprocal(one_plus_sq);
    return ratio.integral();
}

TruncatedSeries divide_by_one_minus_y(const TruncatedSeries &s) {
    TruncatedSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n)
        out.set_coeff(n, s.coeff(n).divide_by_one_minus_y());
    return out;
}

namespace {

// 1 + c1*z with a polynomial coefficient.
TruncatedSeries one_plus_linear(int order, MarkerPolynomial c1) {
    TruncatedSeries s = TruncatedSeries::constant(order, Rat(1));
    if (order >= 1) s.set_coeff(1, std::move(c1));
    return s;
}

TruncatedSeries one_minus_2z(int order) {
    return one_plus_linear(order, MarkerPolynomial(Rat(-2)));
}

TruncatedSeries one_minus_2yz(int order) {
    return one_plus_linear(order, MarkerPolynomial::monomial(Rat(-2), 1));
}

// 1 - z(1 + y)
TruncatedSeries one_minus_z_one_plus_y(int order) {
    return one_plus_linear(order, MarkerPolynomial::from_coeffs({Rat(-1), Rat(-1)}));
}

void check_degree_bound(const TruncatedSeries &gf) {
    // [z^n] of every statistic's generating function has y-degree <= n-1.
    for (int n = 0; n <= gf.order(); ++n)
        if (gf.coeff(n).degree() > n - 1)
            throw std::logic_error("generating function coefficient of z^" + std::to_string(n) +
                                   " has y-degree " + std::to_string(gf.coeff(n).degree()));
}

} // namespace

TruncatedSeries build_gf(StatKind stat, int order) {
    if (order < 1) throw std::invalid_argument("build_gf: order must be >= 1");
    TruncatedSeries gf(order);
    switch (stat) {
    case StatKind::Crossing: {
        // z / (sqrt(1-2z) (1 - z(1+y)))
        TruncatedSeries inv_root = reciprocal(sqrt(one_minus_2z(order)));
        gf = (inv_root * reciprocal(one_minus_z_one_plus_y(order))).times_z();
        break;
    }
    case StatKind::Contained: {
        // (sqrt(1-2yz) - sqrt(1-2z)) / ((1-2z)(1-y))
        TruncatedSeries num = sqrt(one_minus_2yz(order)) - sqrt(one_minus_2z(order));
        gf = divide_by_one_minus_y(num) * reciprocal(one_minus_2z(order));
        break;
    }
    case StatKind::Containing: {
        // log((1 - z(1+y)) / (1-2z)) / ((1-y) sqrt(1-2z))
        TruncatedSeries arg = one_minus_z_one_plus_y(order) * reciprocal(one_minus_2z(order));
        gf = divide_by_one_minus_y(log(arg)) * reciprocal(sqrt(one_minus_2z(order)));
        break;
    }
    case StatKind::Excluded: {
        // atan((1-y) z / sqrt((1-2z)(1-2yz))) / ((1-y) sqrt(1-2z))
        TruncatedSeries root = sqrt(one_minus_2z(order) * one_minus_2yz(order));
        TruncatedSeries lin(order);  // (1-y) z
        lin.set_coeff(1, MarkerPolynomial::from_coeffs({Rat(1), Rat(-1)}));
        TruncatedSeries w = lin * reciprocal(root);
        gf = divide_by_one_minus_y(atan(w)) * reciprocal(sqrt(one_minus_2z(order)));
        break;
    }
    }
    check_degree_bound(gf);
    return gf;
}

Int gf_coefficient(const TruncatedSeries &gf, int n, int p) {
    if (n < 1 || n > gf.order())
        throw std::invalid_argument("gf_coefficient: n=" + std::to_string(n) +
                                    " outside built order " + std::to_string(gf.order()));
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("gf_coefficient: p must lie in [0, n-1]");
    Rat value = gf.coeff(n).coeff(p) * Rat(exact::factorial(n));
    return to_integer(value);
}

Int gf_coefficient(StatKind stat, int n, int p, int order) {
    return gf_coefficient(build_gf(stat, order), n, p);
}

} // namespace chordstats::series
